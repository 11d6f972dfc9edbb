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


#ifndef OQL_TESTS_SUPPORT_HPP_
#define OQL_TESTS_SUPPORT_HPP_

#include <string>
#include <vector>

#include "oql/category.hpp"
#include "oql/common.hpp"

namespace oql::test {

// Names of the failing checks, for readable doctest output.
inline std::string failures(const CheckList& checks) {
  std::string out;
  for (const auto& c : checks.items())
    if (!c.ok && !c.skipped) out += c.name + "{" + c.witness + "} ";
  return out;
}

inline std::vector<std::string> rows(const OmegaCategory& a, const PresheafFamily& f) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(presheaf_name(a.omega(), f[i]));
  return out;
}

}  // namespace oql::test

#define CHECK_ALL_OK(list) CHECK_MESSAGE((list).all_ok(), ::oql::test::failures(list))

#endif  // OQL_TESTS_SUPPORT_HPP_
