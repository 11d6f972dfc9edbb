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


#ifndef OQL_IO_HPP_
#define OQL_IO_HPP_

#include <string>
#include <string_view>

#include "oql/category.hpp"
#include "oql/quantale.hpp"

namespace oql {

/// Parses a quantale file without verifying the laws, so that a broken table
/// can still be diagnosed. Throws Error(Parse) with line and column.
QuantaleSpec quantale_spec_from_json(std::string_view text, std::string_view source = "<input>");
QuantaleSpec load_quantale_spec(const std::string& path);

/// Parses and verifies; law failures keep their own error kinds.
QuantalePtr load_quantale(const std::string& path);

/// "quantale" is a built-in name or an inline quantale object.
OmegaCategory category_from_json(std::string_view text, std::string_view source = "<input>");
OmegaCategory load_category(const std::string& path);

std::string read_file(const std::string& path);

}  // namespace oql

#endif  // OQL_IO_HPP_
