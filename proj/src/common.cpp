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


#include "oql/common.hpp"

#include <cstdlib>
#include <limits>

namespace oql {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LatticeInvalid: return "LatticeInvalid";
    case ErrorKind::NotMonotone: return "NotMonotone";
    case ErrorKind::NotAssociative: return "NotAssociative";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::UnitLawFails: return "UnitLawFails";
    case ErrorKind::JoinDistributionFails: return "JoinDistributionFails";
    case ErrorKind::BadSize: return "BadSize";
    case ErrorKind::SizeBound: return "SizeBound";
    case ErrorKind::ReflexivityFails: return "ReflexivityFails";
    case ErrorKind::TransitivityFails: return "TransitivityFails";
    case ErrorKind::NotFunctor: return "NotFunctor";
    case ErrorKind::NoAdjoint: return "NoAdjoint";
    case ErrorKind::NotAntisymmetric: return "NotAntisymmetric";
    case ErrorKind::UnderlyingNotComplete: return "UnderlyingNotComplete";
    case ErrorKind::NotTensored: return "NotTensored";
    case ErrorKind::NotCotensored: return "NotCotensored";
    case ErrorKind::ModuleLawFails: return "ModuleLawFails";
    case ErrorKind::NotCD: return "NotCD";
    case ErrorKind::NotGirard: return "NotGirard";
    case ErrorKind::NotIntegral: return "NotIntegral";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, std::string message, std::vector<std::string> witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message +
                         (witness.empty() ? std::string() : " [" + join_names(witness) + "]")),
      kind_(kind),
      witness_(std::move(witness)) {}

Budget Budget::standard() {
  Budget b;
  if (const char* env = std::getenv("OQL_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) b.limit = v;
  }
  return b;
}

void throw_size_bound(std::string_view what, std::uint64_t needed, const Budget& budget) {
  throw Error(ErrorKind::SizeBound,
              std::string(what) + " needs more than " + std::to_string(budget.limit) + " candidates",
              {std::to_string(needed), std::to_string(budget.limit)});
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > kMax / base) return kMax;
    r *= base;
  }
  return r;
}

void CheckList::pass(std::string name, std::string note) {
  items_.push_back({std::move(name), true, {}, false, std::move(note)});
}

void CheckList::fail(std::string name, std::string witness) {
  if (witness.empty()) witness = "(unspecified)";
  items_.push_back({std::move(name), false, std::move(witness), false, {}});
}

void CheckList::record(std::string name, bool ok, std::string witness) {
  if (ok)
    pass(std::move(name));
  else
    fail(std::move(name), std::move(witness));
}

void CheckList::skip(std::string name, std::string reason) {
  items_.push_back({std::move(name), true, {}, true, std::move(reason)});
}

void CheckList::append(const CheckList& other, std::string_view prefix) {
  for (Check c : other.items_) {
    if (!prefix.empty()) c.name = std::string(prefix) + "." + c.name;
    items_.push_back(std::move(c));
  }
}

bool CheckList::all_ok() const {
  for (const auto& c : items_)
    if (!c.ok) return false;
  return true;
}

const Check* CheckList::find(std::string_view name) const {
  for (const auto& c : items_)
    if (c.name == name) return &c;
  return nullptr;
}

std::string join_names(const std::vector<std::string>& names, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += sep;
    out += names[i];
  }
  return out;
}

}  // namespace oql
