// Copyright 2026 The OQL Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef OQL_CATEGORY_HPP_
#define OQL_CATEGORY_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oql/common.hpp"
#include "oql/kernels.hpp"
#include "oql/quantale.hpp"

namespace oql {

// A finite category enriched in a quantale: objects plus an Omega-valued hom
// matrix satisfying I <= hom(a,a) and hom(a,b)*hom(b,c) <= hom(a,c).
class OmegaCategory {
 public:
  OmegaCategory() = default;
  /// Validates reflexivity and transitivity; throws with a witness on failure.
  OmegaCategory(QuantalePtr omega, std::vector<std::string> objects, std::vector<Elem> hom, std::string label = {});

  const Quantale& omega() const { return *omega_; }
  const QuantalePtr& quantale() const noexcept { return omega_; }
  std::size_t size() const noexcept { return objects_.size(); }
  Elem hom(Index a, Index b) const { return hom_[static_cast<std::size_t>(a) * size() + b]; }
  const std::vector<Elem>& hom_table() const noexcept { return hom_; }
  const std::string& object(Index a) const { return objects_.at(a); }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  std::optional<Index> find(std::string_view name) const;
  const std::string& label() const noexcept { return label_; }

  /// a <= b in the underlying preorder: hom(a,b) >= I.
  bool leq(Index a, Index b) const { return omega_->leq(omega_->unit(), hom(a, b)); }

  friend bool operator==(const OmegaCategory& x, const OmegaCategory& y) {
    return x.omega_ == y.omega_ && x.objects_ == y.objects_ && x.hom_ == y.hom_;
  }

 private:
  QuantalePtr omega_;
  std::vector<std::string> objects_;
  std::vector<Elem> hom_;
  std::string label_;
};

/// Same as the validating constructor; kept as a named entry point.
OmegaCategory check_category(QuantalePtr omega, std::vector<std::string> objects, std::vector<Elem> hom,
                             std::string label = {});

// Constructors --------------------------------------------------------------

OmegaCategory dual(const OmegaCategory& a);
OmegaCategory discrete(QuantalePtr omega, std::vector<std::string> objects);
OmegaCategory discrete(QuantalePtr omega, std::size_t n);
/// One object with hom = top.
OmegaCategory terminal(QuantalePtr omega);
OmegaCategory subcategory(const OmegaCategory& a, const std::vector<Index>& subset);
/// Hom is the meet of the component homs; the empty product is terminal().
OmegaCategory product(QuantalePtr omega, const std::vector<OmegaCategory>& factors);
/// Omega with hom(a,b) = a -> b.
OmegaCategory canonical_omega(QuantalePtr omega);
/// The n-chain 0 < 1 < ... < n-1 with hom(i,j) = I for i <= j and bottom otherwise.
OmegaCategory chain_category(QuantalePtr omega, std::size_t n);

struct FunctorCategory {
  OmegaCategory category;        // objects are the functors
  std::vector<ObjectMap> maps;   // maps[k] is the object function of object k
};

/// All Omega-functors A -> B with hom(f,g) = meet over x of B(f x, g x).
FunctorCategory functor_category(const OmegaCategory& a, const OmegaCategory& b,
                                 const Budget& budget = Budget::standard(),
                                 kernels::ExecPolicy policy = kernels::ExecPolicy::Parallel);

std::vector<std::uint8_t> underlying_preorder(const OmegaCategory& a);
bool is_antisymmetric(const OmegaCategory& a);
/// Objects a, b with hom >= I both ways.
bool isomorphic_objects(const OmegaCategory& a, Index x, Index y);

// Functors and adjunctions --------------------------------------------------

bool is_functor(const OmegaCategory& dom, const OmegaCategory& cod, const ObjectMap& f);
/// First pair (a,b) with A(a,b) !<= B(f a, f b).
std::optional<std::pair<Index, Index>> functor_violation(const OmegaCategory& dom, const OmegaCategory& cod,
                                                         const ObjectMap& f);
bool is_isometry(const OmegaCategory& dom, const OmegaCategory& cod, const ObjectMap& f);
ObjectMap compose(const ObjectMap& g, const ObjectMap& f);  // g after f
ObjectMap identity_map(std::size_t n);
ObjectMap constant_map(std::size_t n, Index value);

struct Adjunction {
  ObjectMap left;   // f: A -> B
  ObjectMap right;  // g: B -> A
};

/// Exact hom equality B(f a, b) = A(a, g b) plus functoriality of both maps.
CheckList check_adjunction(const OmegaCategory& a, const OmegaCategory& b, const Adjunction& adj);
bool is_adjunction(const OmegaCategory& a, const OmegaCategory& b, const Adjunction& adj);

/// All right adjoints g: B -> A of f: A -> B, lexicographically ordered.
/// An empty result means f has no right adjoint.
std::vector<ObjectMap> find_right_adjoints(const OmegaCategory& a, const OmegaCategory& b, const ObjectMap& f,
                                           const Budget& budget = Budget::standard());
/// All left adjoints f: A -> B of g: B -> A.
std::vector<ObjectMap> find_left_adjoints(const OmegaCategory& a, const OmegaCategory& b, const ObjectMap& g,
                                          const Budget& budget = Budget::standard());

/// f g f = f, g f g = g, and the injectivity/surjectivity equivalences with
/// the accompanying isometry statements.
CheckList adjunction_properties(const OmegaCategory& a, const OmegaCategory& b, const Adjunction& adj);

// Presheaves ----------------------------------------------------------------

enum class Variance { Lower, Upper };

struct Presheaf {
  Variance variance = Variance::Lower;
  std::vector<Elem> values;

  friend bool operator==(const Presheaf&, const Presheaf&) = default;
};

/// Lower: phi(x)*A(y,x) <= phi(y). Upper: psi(x)*A(x,y) <= psi(y).
bool is_presheaf(const OmegaCategory& a, Variance v, std::span<const Elem> values);
Presheaf yoneda(const OmegaCategory& a, Index x);
Presheaf coyoneda(const OmegaCategory& a, Index x);
std::vector<Elem> up_close(const OmegaCategory& a, std::span<const Elem> mu);
std::vector<Elem> down_close(const OmegaCategory& a, std::span<const Elem> mu);
/// Meet over x of phi1(x) -> phi2(x); the hom of both presheaf categories.
Elem presheaf_hom(const Quantale& q, std::span<const Elem> phi1, std::span<const Elem> phi2);

// Enumerated presheaves on a category, sorted lexicographically.
class PresheafFamily {
 public:
  PresheafFamily() = default;
  PresheafFamily(Variance v, std::size_t width, std::vector<Elem> data);

  Variance variance() const noexcept { return variance_; }
  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return count_; }
  std::span<const Elem> operator[](std::size_t i) const {
    return {data_.data() + i * width_, width_};
  }
  std::optional<Index> index_of(std::span<const Elem> values) const;
  /// Like index_of, throwing Error(Internal) when absent.
  Index require(std::span<const Elem> values) const;

 private:
  Variance variance_ = Variance::Lower;
  std::size_t width_ = 0;
  std::size_t count_ = 0;
  std::vector<Elem> data_;
};

PresheafFamily enumerate_presheaves(const OmegaCategory& a, Variance v, const Budget& budget = Budget::standard(),
                                    kernels::ExecPolicy policy = kernels::ExecPolicy::Parallel);
/// Every function |A| -> Omega (the presheaves on the discrete category).
PresheafFamily all_functions(const OmegaCategory& a, const Budget& budget = Budget::standard());

std::string presheaf_name(const Quantale& q, std::span<const Elem> values);
/// [A^op,Omega] or [A,Omega] over an enumerated family.
OmegaCategory presheaf_category(const OmegaCategory& a, const PresheafFamily& family, std::string label = {});

/// Yoneda equalities for every (object, presheaf) pair of both variances and
/// the isometry property of both embeddings.
CheckList yoneda_check(const OmegaCategory& a, const Budget& budget = Budget::standard());

/// Closure of [A,Omega] under joins, meets, alpha*psi, alpha->psi, plus the
/// double-dualization identity psi = meet_alpha ((psi -> alpha) -> alpha).
CheckList closure_check(const OmegaCategory& a, const Budget& budget = Budget::standard());

// Kan extensions along f: A -> B ------------------------------------------

std::vector<Elem> pullback(const ObjectMap& f, std::span<const Elem> psi);
/// Join of phi over each fiber of f; bottom on empty fibers.
std::vector<Elem> image(const OmegaCategory& b, const ObjectMap& f, std::span<const Elem> phi);
std::vector<Elem> left_kan(const OmegaCategory& a, const OmegaCategory& b, const ObjectMap& f,
                           std::span<const Elem> presheaf, Variance v);
std::vector<Elem> right_kan(const OmegaCategory& a, const OmegaCategory& b, const ObjectMap& f,
                            std::span<const Elem> presheaf, Variance v);

/// Verifies left_kan -| pullback -| right_kan on the enumerated presheaf
/// categories of both variances, and the image/closure formula for left_kan.
CheckList kan_check(const OmegaCategory& a, const OmegaCategory& b, const ObjectMap& f,
                    const Budget& budget = Budget::standard());

std::string map_name(const OmegaCategory& cod, const ObjectMap& f);

}  // namespace oql

#endif  // OQL_CATEGORY_HPP_
