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


#ifndef OQL_REPORT_HPP_
#define OQL_REPORT_HPP_

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "oql/cd.hpp"
#include "oql/common.hpp"

namespace oql {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitParse = 2, kExitBudget = 3 };

class Report {
 public:
  explicit Report(std::string command = {}) : command_(std::move(command)) {}

  void add(const CheckList& checks, std::string_view prefix = {});
  void add(Check check);
  /// Marks `name` skipped because a size bound was hit; the run exits 3.
  void budget_skip(std::string name, const Error& e);
  void stamp(const std::string& key, std::string value) { stamps_[key] = std::move(value); }
  nlohmann::json& data() { return data_; }
  const nlohmann::json& data() const { return data_; }
  void timing(const std::string& key, double seconds) { timings_[key] = seconds; }
  void merge(const Report& other);

  const std::vector<Check>& checks() const noexcept { return checks_; }
  std::size_t passed() const;
  std::size_t failed() const;
  std::size_t skipped() const;
  bool budget_exceeded() const noexcept { return budget_exceeded_; }
  int exit_code() const;

  /// Canonical form: checks sorted by name, object keys sorted, no timings unless asked.
  std::string json(bool with_timing = false) const;
  /// Failures first, then passes and skips.
  std::string text(bool with_timing = false) const;

 private:
  std::string command_;
  std::vector<Check> checks_;
  std::map<std::string, std::string> stamps_;
  std::map<std::string, double> timings_;
  nlohmann::json data_ = nlohmann::json::object();
  bool budget_exceeded_ = false;
};

/// Element name -> presheaf table (element name -> value name).
nlohmann::json downarrow_json(const CompleteOmegaLattice& l, const DownarrowOperator& op);
nlohmann::json presheaf_json(const OmegaCategory& a, std::span<const Elem> values);

}  // namespace oql

#endif  // OQL_REPORT_HPP_
