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


#include "oql/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace oql {

namespace {

using nlohmann::json;

struct Source {
  std::string_view text;
  std::string_view name;

  // Location of the first occurrence of `needle` (quoted), or just the file name.
  std::string where(std::string_view needle) const {
    const std::string quoted = "\"" + std::string(needle) + "\"";
    auto pos = text.find(quoted);
    if (pos == std::string_view::npos) return std::string(name);
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return std::string(name) + ":" + std::to_string(line) + ":" + std::to_string(col);
  }

  [[noreturn]] void fail(std::string_view needle, const std::string& message) const {
    throw Error(ErrorKind::Parse, where(needle) + ": " + message, {std::string(needle)});
  }
};

json parse(const Source& src) {
  try {
    return json::parse(src.text);
  } catch (const json::parse_error& e) {
    // byte offset -> line:column
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < src.text.size(); ++i) {
      if (src.text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw Error(ErrorKind::Parse,
                std::string(src.name) + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

const json& member(const Source& src, const json& obj, const char* key, json::value_t type) {
  if (!obj.is_object()) src.fail(key, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) src.fail(key, std::string("missing key \"") + key + "\"");
  const bool ok = it->type() == type || (type == json::value_t::number_unsigned && it->is_number_integer());
  if (!ok) src.fail(key, std::string("key \"") + key + "\" has the wrong type");
  return *it;
}

std::string string_at(const Source& src, const json& v, std::string_view context) {
  if (!v.is_string()) src.fail(context, "expected a string in \"" + std::string(context) + "\"");
  return v.get<std::string>();
}

std::pair<std::string, std::string> split_pair(const Source& src, const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos)
    src.fail(key, "key \"" + key + "\" is not of the form \"a,b\"");
  return {key.substr(0, comma), key.substr(comma + 1)};
}

QuantaleSpec spec_from(const Source& src, const json& j) {
  QuantaleSpec spec;
  spec.name = j.contains("name") ? string_at(src, j["name"], "name") : std::string("file");

  std::vector<std::string> names;
  for (const auto& e : member(src, j, "elements", json::value_t::array)) names.push_back(string_at(src, e, "elements"));
  if (names.empty()) src.fail("elements", "no elements");
  std::map<std::string, Elem> index;
  for (const auto& n : names) {
    if (index.count(n)) src.fail(n, "duplicate element \"" + n + "\"");
    if (n.find(',') != std::string::npos) src.fail(n, "element names may not contain ','");
    if (index.size() > 250) src.fail(n, "too many elements");
    index.emplace(n, static_cast<Elem>(index.size()));
  }
  auto elem = [&](const std::string& n) {
    auto it = index.find(n);
    if (it == index.end()) src.fail(n, "unknown element \"" + n + "\"");
    return it->second;
  };

  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : member(src, j, "leq", json::value_t::array)) {
    if (!p.is_array() || p.size() != 2) src.fail("leq", "each leq entry must be a pair [a,b]");
    auto a = string_at(src, p[0], "leq"), b = string_at(src, p[1], "leq");
    elem(a);
    elem(b);
    pairs.emplace_back(a, b);
  }
  try {
    spec.lattice = FiniteLattice::from_relation(names, pairs);
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(src.name) + ": " + e.what(), e.witness());
  }
  spec.unit = elem(string_at(src, member(src, j, "unit", json::value_t::string), "unit"));

  const std::size_t n = names.size();
  std::vector<int> table(n * n, -1);
  for (const auto& [key, value] : member(src, j, "tensor", json::value_t::object).items()) {
    auto [a, b] = split_pair(src, key);
    table[elem(a) * n + elem(b)] = elem(string_at(src, value, key));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a * n + b] >= 0) continue;
      if (table[b * n + a] < 0) src.fail("tensor", "missing tensor entry \"" + names[a] + "," + names[b] + "\"");
      table[a * n + b] = table[b * n + a];
    }
  spec.tensor.assign(table.begin(), table.end());
  return spec;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path, {path});
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

QuantaleSpec quantale_spec_from_json(std::string_view text, std::string_view source) {
  Source src{text, source};
  return spec_from(src, parse(src));
}

QuantaleSpec load_quantale_spec(const std::string& path) {
  const auto text = read_file(path);
  return quantale_spec_from_json(text, path);
}

QuantalePtr load_quantale(const std::string& path) { return verify_quantale(load_quantale_spec(path)); }

OmegaCategory category_from_json(std::string_view text, std::string_view source) {
  Source src{text, source};
  const json j = parse(src);
  if (!j.is_object()) src.fail("quantale", "expected an object");
  auto qit = j.find("quantale");
  if (qit == j.end()) src.fail("quantale", "missing key \"quantale\"");
  QuantalePtr omega;
  if (qit->is_string()) {
    try {
      omega = builtin(qit->get<std::string>());
    } catch (const Error& e) {
      src.fail(qit->get<std::string>(), e.what());
    }
  } else if (qit->is_object()) {
    omega = verify_quantale(spec_from(src, *qit));
  } else {
    src.fail("quantale", "\"quantale\" must be a built-in name or an object");
  }

  std::vector<std::string> objects;
  std::map<std::string, Index> index;
  for (const auto& o : member(src, j, "objects", json::value_t::array)) {
    auto name = string_at(src, o, "objects");
    if (index.count(name)) src.fail(name, "duplicate object \"" + name + "\"");
    if (name.find(',') != std::string::npos) src.fail(name, "object names may not contain ','");
    index.emplace(name, static_cast<Index>(objects.size()));
    objects.push_back(name);
  }
  const std::size_t n = objects.size();
  auto object = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end()) src.fail(name, "unknown object \"" + name + "\"");
    return it->second;
  };
  std::vector<int> hom(n * n, -1);
  for (const auto& [key, value] : member(src, j, "hom", json::value_t::object).items()) {
    auto [a, b] = split_pair(src, key);
    const auto v = string_at(src, value, key);
    auto e = omega->lattice().find(v);
    if (!e) src.fail(v, "unknown element \"" + v + "\"");
    hom[object(a) * n + object(b)] = *e;
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (hom[a * n + a] < 0) hom[a * n + a] = omega->unit();
    for (std::size_t b = 0; b < n; ++b)
      if (hom[a * n + b] < 0) src.fail("hom", "missing hom entry \"" + objects[a] + "," + objects[b] + "\"");
  }
  const std::string label =
      j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : std::string(source);
  return check_category(omega, objects, std::vector<Elem>(hom.begin(), hom.end()), label);
}

OmegaCategory load_category(const std::string& path) {
  const auto text = read_file(path);
  return category_from_json(text, path);
}

}  // namespace oql
