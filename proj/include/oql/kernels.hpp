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


#ifndef OQL_KERNELS_HPP_
#define OQL_KERNELS_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "oql/common.hpp"

// Exhaustive enumeration kernels. Each kernel has a brute-force reference
// implementation (kept for testing and benchmarking) and a pruned,
// OpenMP-parallel implementation. Both return their solutions in the same
// lexicographic order, so results are interchangeable bit for bit.
namespace oql::kernels {

enum class ExecPolicy { Reference, Parallel };

// Search for all maps f: dom -> cod with dom(a,b) <= cod(f a, f b), where the
// comparison is the order of the truth-value algebra.
struct FunctorSearch {
  std::size_t dom_size = 0;
  std::size_t cod_size = 0;
  std::span<const Elem> dom_hom;            // dom_size x dom_size
  std::span<const Elem> cod_hom;            // cod_size x cod_size
  std::span<const std::uint8_t> omega_leq;  // omega_size x omega_size
  std::size_t omega_size = 0;
  // Optional per-object candidate images (ascending). When the list has
  // dom_size entries it replaces the full codomain for each object.
  std::vector<std::vector<Index>> allowed;
};

// Row-major list of maps (count x width). A map out of the empty domain is
// represented by count == 1 and width == 0.
struct MapList {
  std::size_t width = 0;
  std::size_t count = 0;
  std::vector<Index> data;

  ObjectMap row(std::size_t i) const {
    return ObjectMap(data.begin() + static_cast<long>(i * width), data.begin() + static_cast<long>((i + 1) * width));
  }
};

/// All solutions, lexicographically sorted.
MapList enumerate_functors(const FunctorSearch& search, ExecPolicy policy, const Budget& budget);

// A commutative tensor table candidate on a fixed lattice.
struct TensorTable {
  Elem unit = 0;
  std::vector<Elem> table;  // n x n

  friend auto operator<=>(const TensorTable&, const TensorTable&) = default;
};

struct TensorSearch {
  std::size_t size = 0;
  std::span<const std::uint8_t> leq;  // lattice order, size x size
  Elem bottom = 0;
  // Final acceptance test (associativity, join distribution, ...).
  std::function<bool(const TensorTable&)> accept;
};

/// All symmetric, monotone tables with a unit and an absorbing bottom that
/// pass `accept`, sorted by (unit, table). Shard `shard` of `shards` receives
/// the candidates whose search prefix index is congruent to it.
std::vector<TensorTable> enumerate_tensors(const TensorSearch& search, ExecPolicy policy, const Budget& budget,
                                           std::size_t shard = 0, std::size_t shards = 1);

/// Smallest i in [0, n) with !pred(i), or n when every index passes.
std::size_t first_failure(std::size_t n, const std::function<bool(std::size_t)>& pred,
                          ExecPolicy policy = ExecPolicy::Parallel);

/// Number of OpenMP threads the parallel policy will use (1 without OpenMP).
int thread_count();

}  // namespace oql::kernels

#endif  // OQL_KERNELS_HPP_
