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

#ifndef OQL_COMMON_HPP_
#define OQL_COMMON_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace oql {

/// Dense index of an element of a truth-value algebra.
using Elem = std::uint8_t;
/// Dense index of an object of an enriched category.
using Index = std::uint32_t;
/// Total object function, stored as the image of 0..n-1.
using ObjectMap = std::vector<Index>;

enum class ErrorKind {
  LatticeInvalid,
  NotMonotone,
  NotAssociative,
  NotCommutative,
  UnitLawFails,
  JoinDistributionFails,
  BadSize,
  SizeBound,
  ReflexivityFails,
  TransitivityFails,
  NotFunctor,
  NoAdjoint,
  NotAntisymmetric,
  UnderlyingNotComplete,
  NotTensored,
  NotCotensored,
  ModuleLawFails,
  NotCD,
  NotGirard,
  NotIntegral,
  InvalidArgument,
  Parse,
  Internal,
};

std::string_view to_string(ErrorKind kind);

// Every error carries the offending tuple (element or object names) so that
// reports can print a reproduction without re-running the scan.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::vector<std::string> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::string>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::string> witness_;
};

// Candidate cap shared by every enumeration. The default can be overridden
// through the OQL_BUDGET environment variable.
struct Budget {
  std::uint64_t limit = 1'000'000;

  static Budget standard();
};

[[noreturn]] void throw_size_bound(std::string_view what, std::uint64_t needed, const Budget& budget);

/// Saturating integer power, used to size candidate spaces before enumerating.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp);

/// Outcome of one named check; a failed check always carries a witness.
struct Check {
  std::string name;
  bool ok = true;
  std::string witness;
  bool skipped = false;
  std::string note;
};

class CheckList {
 public:
  void pass(std::string name, std::string note = {});
  void fail(std::string name, std::string witness);
  void record(std::string name, bool ok, std::string witness = {});
  void skip(std::string name, std::string reason);
  void append(const CheckList& other, std::string_view prefix = {});

  bool all_ok() const;
  const std::vector<Check>& items() const noexcept { return items_; }
  const Check* find(std::string_view name) const;

 private:
  std::vector<Check> items_;
};

std::string join_names(const std::vector<std::string>& names, std::string_view sep = ",");

}  // namespace oql

#endif  // OQL_COMMON_HPP_
