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


#ifndef OQL_CD_HPP_
#define OQL_CD_HPP_

#include <optional>
#include <string>
#include <vector>

#include "oql/complete.hpp"

namespace oql {

struct CdVerdict {
  bool cd = false;
  std::string equation;  // failing equation when !cd
  std::string witness;
  std::size_t presheaves = 0;
};

enum class MeetScan {
  AllPairs,       // every pair of presheaves
  Irreducibles,   // every presheaf against the meet-irreducible ones
};

/// Meet-irreducible members of the family (those with exactly one upper cover).
std::vector<std::size_t> meet_irreducibles(const OmegaCategory& a, const PresheafFamily& lower);

/// sup: [L^op,Omega] -> L has a left adjoint iff it preserves binary meets,
/// the top presheaf and cotensors (sup(alpha -> phi) = alpha >-> sup phi).
/// Meets of arbitrary pairs reduce to meets with irreducibles by induction.
CdVerdict is_cd(const CompleteOmegaLattice& l, const PresheafFamily& lower, MeetScan scan = MeetScan::Irreducibles,
                kernels::ExecPolicy policy = kernels::ExecPolicy::Parallel);
CdVerdict is_cd(const CompleteOmegaLattice& l, const Budget& budget = Budget::standard());

// The totally-below operator: table[a] is the lower presheaf below a.
struct DownarrowOperator {
  PresheafFamily lower;
  std::vector<std::vector<Elem>> table;
  CheckList certificate;
};

/// table[a] = pointwise meet of {phi : a <= sup phi}, then certified against
/// the adjunction equality. Throws NotCD, or Internal if the criterion and the
/// certificate disagree.
DownarrowOperator downarrow(const CompleteOmegaLattice& l, const Budget& budget = Budget::standard());
DownarrowOperator downarrow(const CompleteOmegaLattice& l, PresheafFamily lower);

/// x * (t -> I) on the canonical structure of Omega.
std::vector<std::vector<Elem>> omega_closed_form(const Quantale& q);

/// down(x)(y) = join_z down(x)(z) * down(z)(y) for all x, y.
CheckList interpolate_check(const CompleteOmegaLattice& l, const DownarrowOperator& op);

struct PresheafCd {
  PresheafFamily base;        // [A^op,Omega] as a family on A
  CompleteOmegaLattice lattice;
  ObjectMap yoneda;           // A -> lattice objects
  std::vector<std::vector<Elem>> table;  // left Kan extension along yoneda
  DownarrowOperator generic;
  CheckList checks;
};

/// [A^op,Omega] with its operator computed as the left Kan extension along the
/// Yoneda embedding, compared with the generic construction.
PresheafCd presheaf_downarrow(const OmegaCategory& a, const Budget& budget = Budget::standard());

struct ProductCd {
  ProductLattice product;
  std::vector<std::vector<Elem>> table;  // down-closure of the padded joins
  DownarrowOperator generic;
  CheckList checks;
};

ProductCd product_downarrow(QuantalePtr omega, const std::vector<CompleteOmegaLattice>& factors,
                            const Budget& budget = Budget::standard());

/// a meet (b join c) = (a meet b) join (a meet c); first failing triple otherwise.
std::optional<std::vector<std::string>> classical_cd_witness(const FiniteLattice& lat);
bool classical_cd(const FiniteLattice& lat);
/// The underlying order of a complete Omega-lattice as a FiniteLattice.
FiniteLattice underlying_lattice(const CompleteOmegaLattice& l);

/// If Omega is distributive, every CD lattice of the corpus has a distributive
/// underlying lattice; the converse direction is recorded on canonical Omega.
CheckList classical_cd_check(const QuantalePtr& omega, const std::vector<CompleteOmegaLattice>& corpus,
                        const Budget& budget = Budget::standard());

}  // namespace oql

#endif  // OQL_CD_HPP_
