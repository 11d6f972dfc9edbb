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


#ifndef OQL_GIRARD_HPP_
#define OQL_GIRARD_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oql/cd.hpp"
#include "oql/complete.hpp"

namespace oql {

/// On canonical Omega: inf psi = psi(0) -> 0 for every upper presheaf psi, and
/// d(x) = constant (x -> 0) is right adjoint to inf. Skipped when Omega is not Girard.
CheckList girard_inf_check(const QuantalePtr& omega, const Budget& budget = Budget::standard());

/// L^op, certified complete.
CompleteOmegaLattice dual_lattice(const CompleteOmegaLattice& l, const Budget& budget = Budget::standard());
/// Tensors of the dual are the cotensors of L and conversely.
CheckList dual_swap_check(const CompleteOmegaLattice& l, const CompleteOmegaLattice& d);

/// sup preserves binary meets, the top presheaf and sup(alpha -> phi) = alpha >-> sup phi.
/// With every family finite this is the same test as is_cd.
CdVerdict is_omega_heyting(const CompleteOmegaLattice& l, const Budget& budget = Budget::standard());

struct NegationReport {
  std::size_t lower = 0;
  std::size_t upper = 0;
  CheckList checks;
};

/// phi -> (phi(x) -> 0) from [L^op,Omega] to [L,Omega]^op: lands, bijective,
/// involutive and hom preserving. Throws NotGirard.
NegationReport negation_iso(const QuantalePtr& omega, const OmegaCategory& l,
                            const Budget& budget = Budget::standard());

/// canonical Omega, its square and the lower presheaves on the 2-chain.
std::vector<CompleteOmegaLattice> default_corpus(const QuantalePtr& omega, const Budget& budget = Budget::standard());

struct DualityReport {
  bool girard = false;
  bool heyting_op = false;
  std::vector<std::pair<std::string, bool>> corpus_dual_cd;
  std::optional<Elem> witness;  // alpha with (alpha -> 0) -> 0 != alpha
  std::string scope;
  CheckList checks;
};

/// Throws NotIntegral.
DualityReport duality_check(const QuantalePtr& omega, const std::vector<CompleteOmegaLattice>& corpus,
                              const Budget& budget = Budget::standard());

struct FreeCd {
  std::vector<std::string> generators;
  PresheafFamily power;         // all functions X -> Omega
  OmegaCategory power_cat;      // [Omega^X]
  PresheafFamily upper;         // [[Omega^X],Omega]
  CompleteOmegaLattice lattice; // its dual
  std::vector<Index> unit;      // x -> evaluation at x
  bool experimental = false;
  CheckList checks;
};

/// Throws NotGirard unless `experimental`, in which case the failing
/// certification steps are recorded instead.
FreeCd free_cd(const QuantalePtr& omega, std::vector<std::string> generators, bool experimental = false,
               const Budget& budget = Budget::standard());

struct Extension {
  ObjectMap map;                     // F(X) -> A
  std::size_t agreeing_morphisms = 0;
  CheckList checks;
};

/// g = sup_A . inf . (f^<-)^<-, with g . unit = f, g a complete morphism,
/// and uniqueness among all complete morphisms that agree with f on the unit.
Extension extend(const FreeCd& free, const CompleteOmegaLattice& a, const ObjectMap& f,
                 const Budget& budget = Budget::standard());

}  // namespace oql

#endif  // OQL_GIRARD_HPP_
