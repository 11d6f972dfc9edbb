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


#include "oql/lattice.hpp"

#include <algorithm>
#include <set>

namespace oql {

namespace {

// Least upper bound of {a,b} in a validated partial order, if it exists.
std::optional<Elem> bound(const std::vector<std::uint8_t>& leq, std::size_t n, Elem a, Elem b, bool upper) {
  auto le = [&](std::size_t x, std::size_t y) { return leq[x * n + y] != 0; };
  std::optional<Elem> best;
  for (std::size_t c = 0; c < n; ++c) {
    bool is_bound = upper ? (le(a, c) && le(b, c)) : (le(c, a) && le(c, b));
    if (!is_bound) continue;
    if (!best || (upper ? le(c, *best) : le(*best, c))) best = static_cast<Elem>(c);
  }
  if (!best) return std::nullopt;
  // best must be comparable with every other bound
  for (std::size_t c = 0; c < n; ++c) {
    bool is_bound = upper ? (le(a, c) && le(b, c)) : (le(c, a) && le(c, b));
    if (is_bound && !(upper ? le(*best, c) : le(c, *best))) return std::nullopt;
  }
  return best;
}

}  // namespace

FiniteLattice::FiniteLattice(std::vector<std::string> names, std::vector<std::uint8_t> leq)
    : names_(std::move(names)), leq_(std::move(leq)) {
  const std::size_t n = names_.size();
  if (n == 0) throw Error(ErrorKind::LatticeInvalid, "empty carrier");
  if (n > 255) throw Error(ErrorKind::BadSize, "carrier larger than 255 elements");
  if (leq_.size() != n * n) throw Error(ErrorKind::LatticeInvalid, "order table has wrong size");
  {
    std::set<std::string> seen(names_.begin(), names_.end());
    if (seen.size() != n) throw Error(ErrorKind::LatticeInvalid, "duplicate element names");
  }
  auto le = [&](std::size_t x, std::size_t y) { return leq_[x * n + y] != 0; };
  for (std::size_t a = 0; a < n; ++a)
    if (!le(a, a)) throw Error(ErrorKind::LatticeInvalid, "order not reflexive", {names_[a]});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && le(a, b) && le(b, a))
        throw Error(ErrorKind::LatticeInvalid, "order not antisymmetric", {names_[a], names_[b]});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (le(a, b) && le(b, c) && !le(a, c))
          throw Error(ErrorKind::LatticeInvalid, "order not transitive", {names_[a], names_[b], names_[c]});

  join_.resize(n * n);
  meet_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      auto j = bound(leq_, n, static_cast<Elem>(a), static_cast<Elem>(b), true);
      auto m = bound(leq_, n, static_cast<Elem>(a), static_cast<Elem>(b), false);
      if (!j) throw Error(ErrorKind::LatticeInvalid, "no least upper bound", {names_[a], names_[b]});
      if (!m) throw Error(ErrorKind::LatticeInvalid, "no greatest lower bound", {names_[a], names_[b]});
      join_[a * n + b] = *j;
      meet_[a * n + b] = *m;
    }
  }
  Elem top = 0, bot = 0;
  for (std::size_t a = 1; a < n; ++a) {
    top = join_[top * n + a];
    bot = meet_[bot * n + a];
  }
  top_ = top;
  bottom_ = bot;
}

FiniteLattice FiniteLattice::from_relation(const std::vector<std::string>& names,
                                           const std::vector<std::pair<std::string, std::string>>& pairs) {
  const std::size_t n = names.size();
  auto index_of = [&](const std::string& s) -> std::size_t {
    auto it = std::find(names.begin(), names.end(), s);
    if (it == names.end()) throw Error(ErrorKind::Parse, "unknown element name in order", {s});
    return static_cast<std::size_t>(it - names.begin());
  };
  std::vector<std::uint8_t> rel(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) rel[i * n + i] = 1;
  for (const auto& [a, b] : pairs) rel[index_of(a) * n + index_of(b)] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k * n + j]) rel[i * n + j] = 1;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b && rel[a * n + b] && rel[b * n + a])
        throw Error(ErrorKind::LatticeInvalid, "order not antisymmetric", {names[a], names[b]});

  // Stable linear extension: repeatedly emit the first remaining element
  // (in input order) with no remaining strict predecessor.
  std::vector<std::size_t> order;
  std::vector<bool> placed(n, false);
  while (order.size() < n) {
    for (std::size_t c = 0; c < n; ++c) {
      if (placed[c]) continue;
      bool minimal = true;
      for (std::size_t p = 0; p < n && minimal; ++p)
        if (!placed[p] && p != c && rel[p * n + c]) minimal = false;
      if (minimal) {
        placed[c] = true;
        order.push_back(c);
        break;
      }
    }
  }
  std::vector<std::string> sorted_names(n);
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    sorted_names[i] = names[order[i]];
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = rel[order[i] * n + order[j]];
  }
  return FiniteLattice(std::move(sorted_names), std::move(leq));
}

std::vector<std::string> chain_names(std::size_t n) {
  if (n == 1) return {"0"};
  if (n == 2) return {"0", "1"};
  if (n == 3) return {"0", "u", "1"};
  std::vector<std::string> out{"0"};
  for (std::size_t i = 1; i + 1 < n; ++i) out.push_back("a" + std::to_string(i));
  out.push_back("1");
  return out;
}

FiniteLattice FiniteLattice::chain(std::size_t n) { return chain(chain_names(n)); }

FiniteLattice FiniteLattice::chain(std::vector<std::string> names) {
  const std::size_t n = names.size();
  std::vector<std::uint8_t> leq(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) leq[i * n + j] = i <= j;
  return FiniteLattice(std::move(names), std::move(leq));
}

std::optional<Elem> FiniteLattice::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<Elem>(i);
  return std::nullopt;
}

bool FiniteLattice::is_chain() const {
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b)
      if (!leq(static_cast<Elem>(a), static_cast<Elem>(b)) && !leq(static_cast<Elem>(b), static_cast<Elem>(a)))
        return false;
  return true;
}

}  // namespace oql
