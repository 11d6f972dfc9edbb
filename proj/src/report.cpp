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


#include "oql/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace oql {

void Report::add(Check check) {
  if (!check.ok && !check.skipped && check.witness.empty())
    check.witness = check.note.empty() ? std::string("unreported") : check.note;
  checks_.push_back(std::move(check));
}

void Report::add(const CheckList& checks, std::string_view prefix) {
  for (auto c : checks.items()) {
    c.name = std::string(prefix) + c.name;
    add(std::move(c));
  }
}

void Report::budget_skip(std::string name, const Error& e) {
  Check c;
  c.name = std::move(name);
  c.skipped = true;
  c.note = std::string("budget: ") + e.what();
  checks_.push_back(std::move(c));
  budget_exceeded_ = true;
}

void Report::merge(const Report& other) {
  for (const auto& c : other.checks_) checks_.push_back(c);
  for (const auto& [k, v] : other.stamps_) stamps_[k] = v;
  for (const auto& [k, v] : other.timings_) timings_[k] = v;
  data_.update(other.data_);
  budget_exceeded_ = budget_exceeded_ || other.budget_exceeded_;
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.ok && !c.skipped; }));
}
std::size_t Report::failed() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.ok && !c.skipped; }));
}
std::size_t Report::skipped() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.skipped; }));
}

int Report::exit_code() const {
  if (failed() > 0) return kExitFail;
  if (budget_exceeded_) return kExitBudget;
  return kExitPass;
}

namespace {

std::vector<const Check*> sorted(const std::vector<Check>& checks) {
  std::vector<const Check*> out;
  for (const auto& c : checks) out.push_back(&c);
  std::stable_sort(out.begin(), out.end(), [](const Check* a, const Check* b) { return a->name < b->name; });
  return out;
}

const char* status(const Check& c) { return c.skipped ? "skipped" : c.ok ? "pass" : "fail"; }

}  // namespace

std::string Report::json(bool with_timing) const {
  nlohmann::json j;
  j["command"] = command_;
  auto& list = j["checks"] = nlohmann::json::array();
  for (const Check* c : sorted(checks_)) {
    nlohmann::json e{{"name", c->name}, {"status", status(*c)}};
    if (!c->witness.empty()) e["witness"] = c->witness;
    if (!c->note.empty()) e["note"] = c->note;
    list.push_back(std::move(e));
  }
  j["summary"] = {{"passed", passed()}, {"failed", failed()}, {"skipped", skipped()}};
  j["stamps"] = stamps_;
  j["data"] = data_;
  if (with_timing) j["timing"] = timings_;
  return j.dump(2) + "\n";
}

std::string Report::text(bool with_timing) const {
  std::ostringstream out;
  if (!command_.empty()) out << "$ " << command_ << "\n";
  for (const auto& c : checks_)
    if (!c.ok && !c.skipped) out << "FAIL " << c.name << ": " << c.witness << (c.note.empty() ? "" : "  [" + c.note + "]") << "\n";
  for (const auto& c : checks_) {
    if (c.skipped)
      out << "skip " << c.name << " (" << c.note << ")\n";
    else if (c.ok)
      out << "ok   " << c.name << (c.note.empty() ? "" : "  [" + c.note + "]") << "\n";
  }
  for (const auto& [k, v] : stamps_) out << k << ": " << v << "\n";
  if (!data_.empty()) out << data_.dump(2) << "\n";
  if (with_timing)
    for (const auto& [k, v] : timings_) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f s", v);
      out << "time " << k << ": " << buf << "\n";
    }
  out << passed() << " passed, " << failed() << " failed, " << skipped() << " skipped\n";
  return out.str();
}

nlohmann::json presheaf_json(const OmegaCategory& a, std::span<const Elem> values) {
  nlohmann::json j = nlohmann::json::object();
  for (Index x = 0; x < a.size(); ++x) j[a.object(x)] = a.omega().elem_name(values[x]);
  return j;
}

nlohmann::json downarrow_json(const CompleteOmegaLattice& l, const DownarrowOperator& op) {
  nlohmann::json j = nlohmann::json::object();
  for (Index x = 0; x < l.size(); ++x) j[l.cat().object(x)] = presheaf_json(l.cat(), op.table[x]);
  return j;
}

}  // namespace oql
