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


#ifndef OQL_QUANTALE_HPP_
#define OQL_QUANTALE_HPP_

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "oql/common.hpp"
#include "oql/kernels.hpp"
#include "oql/lattice.hpp"

namespace oql {

// Raw, unvalidated quantale data as read from a file or produced by a search.
struct QuantaleSpec {
  std::string name;
  FiniteLattice lattice;
  Elem unit = 0;
  std::vector<Elem> tensor;  // n x n
};

// A validated finite commutative unital quantale. Immutable; shared by every
// category built over it.
class Quantale {
 public:
  const std::string& name() const noexcept { return name_; }
  const FiniteLattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_.size(); }

  Elem unit() const noexcept { return unit_; }
  Elem bottom() const noexcept { return lattice_.bottom(); }
  Elem top() const noexcept { return lattice_.top(); }

  bool leq(Elem a, Elem b) const { return lattice_.leq(a, b); }
  Elem join(Elem a, Elem b) const { return lattice_.join(a, b); }
  Elem meet(Elem a, Elem b) const { return lattice_.meet(a, b); }
  Elem tensor(Elem a, Elem b) const { return tensor_[a * size() + b]; }
  /// Residuation a -> b.
  Elem imp(Elem a, Elem b) const { return residual_[a * size() + b]; }

  Elem join_all(std::span<const Elem> xs) const;
  Elem meet_all(std::span<const Elem> xs) const;

  const std::string& elem_name(Elem e) const { return lattice_.name(e); }
  /// Throws Error(Parse) for an unknown name.
  Elem elem(std::string_view name) const;

  const std::vector<Elem>& tensor_table() const noexcept { return tensor_; }
  const std::vector<Elem>& residual_table() const noexcept { return residual_; }
  QuantaleSpec spec() const { return {name_, lattice_, unit_, tensor_}; }

  bool integral() const noexcept { return unit_ == top(); }

 private:
  friend std::shared_ptr<const Quantale> verify_quantale(const QuantaleSpec& spec);

  std::string name_;
  FiniteLattice lattice_;
  Elem unit_ = 0;
  std::vector<Elem> tensor_;
  std::vector<Elem> residual_;
};

using QuantalePtr = std::shared_ptr<const Quantale>;

// Full diagnosis of a candidate table. `error` holds the first failure in
// check order (unit, monotone, join distribution, associativity,
// commutativity, residuation); a table whose only defect is commutativity has
// commutative == false and is otherwise sound.
struct QuantaleDiagnosis {
  CheckList checks;
  bool commutative = true;
  std::optional<Error> error;

  bool ok() const { return !error.has_value(); }
};

QuantaleDiagnosis diagnose_quantale(const QuantaleSpec& spec);

/// Validates and derives the residuation table; throws the first diagnosed error.
QuantalePtr verify_quantale(const QuantaleSpec& spec);

/// Table lookup for a -> b.
Elem residuate(const Quantale& q, Elem a, Elem b);

/// The ten basic tensor/residuation identities, checked exhaustively; indexed
/// families range over every subset of the carrier.
CheckList check_residuation_laws(const Quantale& q);

struct QuantaleClass {
  bool commutative = true;
  bool integral = false;
  bool divisible = false;
  bool prelinear = false;
  bool bl = false;
  bool girard = false;
  bool mv = false;
  // Counterexample per false flag, keyed by flag name.
  std::vector<std::pair<std::string, std::vector<std::string>>> witnesses;

  const std::vector<std::string>* witness(std::string_view flag) const;
};

QuantaleClass classify(const Quantale& q);

/// boolean2 | lukasiewicz(n) | goedel(n) | nonintegral3.
QuantalePtr builtin_boolean();
QuantalePtr builtin_lukasiewicz(std::size_t n);
QuantalePtr builtin_goedel(std::size_t n);
QuantalePtr builtin_nonintegral3();
/// Parses "boolean", "boolean:2", "boolean2", "lukasiewicz:3", "goedel:4",
/// "nonintegral3", "nonintegral:3"; throws BadSize or InvalidArgument.
QuantalePtr builtin(std::string_view name);

struct EnumerateOptions {
  std::size_t size_bound = 5;
  Budget budget = Budget::standard();
  kernels::ExecPolicy policy = kernels::ExecPolicy::Parallel;
  std::size_t shard = 0;
  std::size_t shards = 1;
};

/// Every commutative unital quantale on `lattice`, deduplicated by table
/// equality only, sorted by (unit, tensor table). Each quantale is named
/// "<prefix>/I=<unit>/<upper triangle of the table>", so names do not depend
/// on sharding.
std::vector<QuantalePtr> enumerate_quantales(const FiniteLattice& lattice, const EnumerateOptions& options = {},
                                             std::string_view prefix = "q");

}  // namespace oql

#endif  // OQL_QUANTALE_HPP_
