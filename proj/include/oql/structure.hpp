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


#ifndef OQL_STRUCTURE_HPP_
#define OQL_STRUCTURE_HPP_

#include <string>
#include <vector>

#include "oql/cd.hpp"
#include "oql/complete.hpp"

namespace oql {

// Subalgebras and closure operators ----------------------------------------

/// Conditions (a) preservation of sup and inf by the embedding, (b) closure
/// under bottom, top, joins, meets, tensors and cotensors, (c) existence of
/// both adjoints of the embedding, and whether the three agree.
CheckList is_subalgebra(const CompleteOmegaLattice& l, const std::vector<Index>& subset,
                        const Budget& budget = Budget::standard());
bool closed_subset(const CompleteOmegaLattice& l, const std::vector<Index>& subset);
/// All subsets closed under the operations of (b), grown from {bottom, top}.
std::vector<std::vector<Index>> enumerate_subalgebras(const CompleteOmegaLattice& l,
                                                      const Budget& budget = Budget::standard());

/// Functor, idempotent, inflationary; "cocontinuous" when it preserves joins and tensors.
CheckList closure_operator_check(const CompleteOmegaLattice& l, const ObjectMap& c);
/// Functor, idempotent, deflationary; "cocontinuous" as above.
CheckList kernel_operator_check(const CompleteOmegaLattice& l, const ObjectMap& k);
std::vector<ObjectMap> enumerate_cocontinuous_closures(const CompleteOmegaLattice& l,
                                                       const Budget& budget = Budget::standard());
std::vector<ObjectMap> enumerate_cocontinuous_kernels(const CompleteOmegaLattice& l,
                                                      const Budget& budget = Budget::standard());

/// c(x) = meet of {y in subset : x <= y}.
ObjectMap closure_of_subalgebra(const CompleteOmegaLattice& l, const std::vector<Index>& subset);
/// The image of c, sorted.
std::vector<Index> subalgebra_of_closure(const ObjectMap& c);

struct BijectionReport {
  std::size_t left_count = 0;   // subalgebras or quotients
  std::size_t right_count = 0;  // closures or kernels
  CheckList checks;
};

BijectionReport closure_bijection_check(const CompleteOmegaLattice& l, const Budget& budget = Budget::standard());

// Quotients and kernel operators -------------------------------------------

struct QuotientPresentation {
  std::vector<std::vector<Index>> classes;  // ordered by representative
  std::vector<Index> representative;        // k-image element naming each class
  ObjectMap quotient;                       // A -> classes
  CompleteOmegaLattice lattice;
  ObjectMap left_adjoint;                   // classes -> A
  ObjectMap right_adjoint;
  CheckList checks;
};

/// B([x],[y]) = A(k x, k y). Checks compatibility of the fibres with joins,
/// tensors, meets and cotensors, well-definedness, and both adjoints of q.
QuotientPresentation quotient_of_kernel(const CompleteOmegaLattice& l, const ObjectMap& k,
                                        const Budget& budget = Budget::standard());
/// k = f . q for the left adjoint f of q. Throws NoAdjoint.
ObjectMap kernel_of_quotient(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const ObjectMap& q,
                             const Budget& budget = Budget::standard());

/// Kernels on one side; on the other every partition whose classes have least
/// elements, with the hom of those least elements and a quotient map that is
/// a functor with both adjoints.
BijectionReport kernel_bijection_check(const CompleteOmegaLattice& l, const Budget& budget = Budget::standard());

// CD transfer ---------------------------------------------------------------

struct TransferredCd {
  CompleteOmegaLattice target;
  std::vector<std::vector<Elem>> table;  // the composite operator
  DownarrowOperator generic;
  CheckList checks;
};

/// Operator on a subalgebra M as the left Kan extension along the left
/// adjoint of the embedding, applied after the operator of L.
TransferredCd subalgebra_cd(const CompleteOmegaLattice& l, const DownarrowOperator& down_l,
                            const std::vector<Index>& subset, const Budget& budget = Budget::standard());
/// Operator on a quotient M along q, applied after the operator of L and the left adjoint of q.
TransferredCd quotient_cd(const CompleteOmegaLattice& l, const DownarrowOperator& down_l,
                          const CompleteOmegaLattice& m, const ObjectMap& q, const Budget& budget = Budget::standard());

struct RaneyBuchi {
  CompleteOmegaLattice ambient;        // all functions L -> Omega
  CompleteOmegaLattice presheaves;     // lower presheaves on L
  std::vector<Index> embedding;        // presheaves -> ambient
  ObjectMap closure;                   // ambient -> presheaves (down-closure)
  ObjectMap sup;                       // presheaves -> L
  ObjectMap down;                      // L -> presheaves
  ObjectMap yoneda;                    // L -> presheaves
  CheckList checks;
};

/// L as a quotient of the subalgebra [L^op,Omega] of the power [Omega^L],
/// plus the converse pipeline recovering the operator of L from that pair.
RaneyBuchi raney_buchi(const CompleteOmegaLattice& l, const Budget& budget = Budget::standard());

// Left adjoints -------------------------------------------------------------

struct LeftAdjointLattice {
  FunctorLattice functors;
  std::vector<Index> left_adjoints;  // indices into functors.maps
  CompleteOmegaLattice lattice;
  CheckList checks;
};

LeftAdjointLattice left_adjoint_lattice(const CompleteOmegaLattice& a, const CompleteOmegaLattice& b,
                                        const Budget& budget = Budget::standard());

struct KernelOnFunctors {
  LeftAdjointLattice left;
  DownarrowOperator down_a;
  ObjectMap kernel;            // on indices of left.functors.maps
  std::vector<Index> fixed;
  std::vector<Index> cocontinuous;
  QuotientPresentation quotient;
  CheckList checks;
};

/// k(f)(a) = join_x down(a)(x) (x) f(x) on [A,B], with the seven proof
/// steps, Fix(k) against the sup-preserving functors, and the quotient
/// compared with [A ->l B].
KernelOnFunctors functor_kernel(const CompleteOmegaLattice& a, const CompleteOmegaLattice& b,
                              const Budget& budget = Budget::standard());

/// For all adjunctions (f1,g1), (f2,g2) between A and B:
/// meet_x B(f1 x, f2 x) = meet_y A(g2 y, g1 y).
CheckList right_adjoint_duality(const OmegaCategory& a, const OmegaCategory& b,
                                const Budget& budget = Budget::standard());

}  // namespace oql

#endif  // OQL_STRUCTURE_HPP_
