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


#ifndef OQL_LATTICE_HPP_
#define OQL_LATTICE_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oql/common.hpp"

namespace oql {

// A finite lattice with dense element indices. Join, meet, top and bottom are
// derived from the order table at construction and are always total.
class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Validates `leq` (row-major, n x n) as a lattice order; keeps the given order of names.
  FiniteLattice(std::vector<std::string> names, std::vector<std::uint8_t> leq);

  /// Takes the reflexive-transitive closure of `pairs` and reorders the
  /// elements into a linear extension that is stable with respect to `names`.
  static FiniteLattice from_relation(const std::vector<std::string>& names,
                                     const std::vector<std::pair<std::string, std::string>>& pairs);

  static FiniteLattice chain(std::size_t n);
  static FiniteLattice chain(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<Elem> find(std::string_view name) const;

  bool leq(Elem a, Elem b) const { return leq_[a * size() + b] != 0; }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  /// Whether the order is total.
  bool is_chain() const;

  const std::vector<std::uint8_t>& leq_table() const noexcept { return leq_; }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

/// Default element names for an n-chain: 0,1 for two elements, 0,u,1 for
/// three, otherwise 0,a1,...,a(n-2),1.
std::vector<std::string> chain_names(std::size_t n);

}  // namespace oql

#endif  // OQL_LATTICE_HPP_
