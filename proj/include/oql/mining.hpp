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


#ifndef OQL_MINING_HPP_
#define OQL_MINING_HPP_

#include <string>
#include <vector>

#include "oql/category.hpp"
#include "oql/report.hpp"

namespace oql {

/// Every Omega-category on n objects named o0.., in lexicographic order of hom tables.
std::vector<OmegaCategory> enumerate_categories(const QuantalePtr& omega, std::size_t n,
                                                const Budget& budget = Budget::standard());

/// The full battery on one quantale: laws and classes, Yoneda, completeness,
/// CD of canonical Omega with interpolation, presheaf and product CD, the
/// subalgebra and quotient bijections, the decomposition round trip, the
/// kernel on functors, and the duality coherence when integral.
/// Check names are prefixed with the quantale name.
Report theorem_suite(const QuantalePtr& omega, const Budget& budget = Budget::standard());

struct MineOptions {
  std::size_t chain_lo = 0;  // 0: no chains
  std::size_t chain_hi = 0;
  std::vector<std::string> lattice_files;
  std::size_t shards = 1;
  Budget budget = Budget::standard();
  std::string repro_dir;  // empty: no reproduction files
};

/// Shards are evaluated concurrently and merged; the JSON form of the result
/// does not depend on the shard count.
Report mine(const MineOptions& options);

/// Lattice file: "name", "elements", "leq" as in quantale files.
FiniteLattice load_lattice(const std::string& path, std::string* name = nullptr);

/// Quantale file contents for `q`, loadable by load_quantale.
std::string quantale_to_json(const Quantale& q);

}  // namespace oql

#endif  // OQL_MINING_HPP_
