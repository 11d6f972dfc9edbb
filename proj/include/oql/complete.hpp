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


#ifndef OQL_COMPLETE_HPP_
#define OQL_COMPLETE_HPP_

#include <span>
#include <string>
#include <vector>

#include "oql/category.hpp"
#include "oql/common.hpp"
#include "oql/lattice.hpp"

namespace oql {

// An antisymmetric Omega-category whose underlying order is a complete lattice
// and which has all tensors and cotensors. Built only by certify_complete.
class CompleteOmegaLattice {
 public:
  const OmegaCategory& cat() const noexcept { return cat_; }
  const Quantale& omega() const { return cat_.omega(); }
  const QuantalePtr& quantale() const noexcept { return cat_.quantale(); }
  std::size_t size() const noexcept { return cat_.size(); }
  Elem hom(Index a, Index b) const { return cat_.hom(a, b); }
  bool leq(Index a, Index b) const { return cat_.leq(a, b); }

  Index join(Index a, Index b) const { return join_[a * size() + b]; }
  Index meet(Index a, Index b) const { return meet_[a * size() + b]; }
  Index bottom() const noexcept { return bottom_; }
  Index top() const noexcept { return top_; }
  /// alpha (x) x, characterized by A(alpha (x) x, y) = alpha -> A(x,y).
  Index tensor(Elem alpha, Index x) const { return tensor_[alpha * size() + x]; }
  /// alpha >-> x, characterized by A(y, alpha >-> x) = alpha -> A(y,x).
  Index cotensor(Elem alpha, Index x) const { return cotensor_[alpha * size() + x]; }

  /// Join over x of phi(x) (x) x. phi need not be a presheaf.
  Index sup(std::span<const Elem> phi) const;
  /// Meet over x of mu(x) >-> x.
  Index inf(std::span<const Elem> mu) const;
  Index join_all(std::span<const Index> xs) const;
  Index meet_all(std::span<const Index> xs) const;

  const CheckList& certificate() const noexcept { return certificate_; }
  const std::string& route() const noexcept { return route_; }

 private:
  friend CompleteOmegaLattice certify_complete(const OmegaCategory& a, const Budget& budget);
  OmegaCategory cat_;
  std::vector<Index> join_, meet_, tensor_, cotensor_;
  Index bottom_ = 0, top_ = 0;
  CheckList certificate_;
  std::string route_;
};

/// Throws NotAntisymmetric, UnderlyingNotComplete, NotTensored or NotCotensored
/// with witnesses. The certificate holds every tensor/cotensor law checked plus
/// the sup adjunction against all lower presheaves (skipped over budget).
CompleteOmegaLattice certify_complete(const OmegaCategory& a, const Budget& budget = Budget::standard());

/// A(sup phi, x) = meet_z phi(z) -> A(z,x) for all x.
bool sup_characterized(const CompleteOmegaLattice& l, std::span<const Elem> phi);
/// A(x, inf mu) = meet_z mu(z) -> A(x,z) for all x.
bool inf_characterized(const CompleteOmegaLattice& l, std::span<const Elem> mu);
/// For every raw function A -> Omega: the formula sup equals the unique object
/// meeting the characterization, likewise for inf, and both are invariant
/// under the matching closure.
CheckList sup_coherence_check(const CompleteOmegaLattice& l, const Budget& budget = Budget::standard());

// Omega-modules -------------------------------------------------------------

struct OmegaModuleSpec {
  QuantalePtr omega;
  FiniteLattice lattice;
  std::vector<Elem> action;  // |Omega| x |lattice|, action[alpha * n + x]
};

/// Unit, associativity and join preservation in each argument (binary and empty).
CheckList check_module(const OmegaModuleSpec& m);
/// A(x,y) = join of {alpha : alpha (x) x <= y}. Throws ModuleLawFails.
CompleteOmegaLattice module_to_enriched(const OmegaModuleSpec& m, const Budget& budget = Budget::standard());
OmegaModuleSpec enriched_to_module(const CompleteOmegaLattice& l);

// Constructions -------------------------------------------------------------

struct FixedPoints {
  std::vector<Index> prefixed;  // x <= f(x)
  std::vector<Index> fixed;     // f(x) = x
  CompleteOmegaLattice lattice;
  CheckList checks;
};

/// Fixed points of an endo-functor, certified complete.
FixedPoints tarski_fix(const CompleteOmegaLattice& l, const ObjectMap& f, const Budget& budget = Budget::standard());

struct FunctorLattice {
  std::vector<ObjectMap> maps;
  CompleteOmegaLattice lattice;
  CheckList checks;
};

/// [A,B] with pointwise joins and tensors.
FunctorLattice functor_lattice(const OmegaCategory& a, const CompleteOmegaLattice& b,
                               const Budget& budget = Budget::standard());

struct ProductLattice {
  std::vector<std::vector<Index>> tuples;  // component indices of each object
  CompleteOmegaLattice lattice;
  std::vector<ObjectMap> projections;
  std::vector<ObjectMap> pad_bottom;  // left adjoints of the projections
  std::vector<ObjectMap> pad_top;     // right adjoints of the projections
  CheckList checks;
};

ProductLattice product_lattice(QuantalePtr omega, const std::vector<CompleteOmegaLattice>& factors,
                               const Budget& budget = Budget::standard());

struct Equalizer {
  std::vector<Index> embedding;
  CompleteOmegaLattice lattice;
  CheckList checks;
};

/// {x : f x = g x}; f and g are expected to be complete morphisms L -> M.
Equalizer equalizer(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const ObjectMap& f,
                    const ObjectMap& g, const Budget& budget = Budget::standard());

/// Existence of both adjoints of f: L -> M.
CheckList is_complete_morphism(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const ObjectMap& f,
                               const Budget& budget = Budget::standard());
bool has_left_adjoint(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const ObjectMap& f);
bool has_right_adjoint(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const ObjectMap& f);
/// f(sup phi) = sup(f phi) over all lower presheaves phi; first failing presheaf name or empty.
std::string sup_preservation_failure(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m,
                                     const ObjectMap& f, const PresheafFamily& lower);
std::string inf_preservation_failure(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m,
                                     const ObjectMap& f, const PresheafFamily& upper);
/// Bottom, binary joins and tensors are preserved; otherwise names the first failure.
std::string join_tensor_failure(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const ObjectMap& f);
std::string meet_cotensor_failure(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const ObjectMap& f);
/// Compares three routes for each side: adjoint search, preservation of
/// sups (infs) on presheaves, and the order-adjoint plus tensor (cotensor) test.
CheckList preservation_check(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const ObjectMap& f,
                             const Budget& budget = Budget::standard());

/// Over every map L -> M: functor iff monotone with alpha (x) f x <= f(alpha (x) x).
CheckList functor_criterion_check(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m,
                       const Budget& budget = Budget::standard());

}  // namespace oql

#endif  // OQL_COMPLETE_HPP_
