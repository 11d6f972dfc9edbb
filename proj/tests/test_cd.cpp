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


#include <doctest.h>

#include "oql/cd.hpp"
#include "support.hpp"

using namespace oql;

namespace {

std::vector<std::string> table_rows(const CompleteOmegaLattice& l, const std::vector<std::vector<Elem>>& table) {
  std::vector<std::string> out;
  for (const auto& row : table) out.push_back(presheaf_name(l.omega(), row));
  return out;
}

FiniteLattice diamond() {
  return FiniteLattice::from_relation({"0", "a", "b", "c", "1"},
                                      {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

}  // namespace

TEST_CASE("canonical Omega is completely distributive") {
  for (auto name : {"boolean2", "lukasiewicz:3", "lukasiewicz:4", "lukasiewicz:5", "goedel:3", "goedel:4", "goedel:5",
                    "nonintegral3"}) {
    CAPTURE(name);
    auto q = builtin(name);
    auto l = certify_complete(canonical_omega(q));
    CHECK(is_cd(l).cd);
    auto op = downarrow(l);
    CHECK_ALL_OK(op.certificate);
    CHECK(op.certificate.find("closed_form") != nullptr);
    CHECK(op.table == omega_closed_form(*q));
    CHECK_ALL_OK(interpolate_check(l, op));
  }
}

TEST_CASE("totally-below tables") {
  // x * (t -> I), tests/oracle/oracle.py
  auto b = certify_complete(canonical_omega(builtin("boolean2")));
  CHECK(table_rows(b, downarrow(b).table) == std::vector<std::string>{"(0,0)", "(1,1)"});
  auto l = certify_complete(canonical_omega(builtin("lukasiewicz:3")));
  CHECK(table_rows(l, downarrow(l).table) == std::vector<std::string>{"(0,0,0)", "(u,u,u)", "(1,1,1)"});
  auto n = certify_complete(canonical_omega(builtin("nonintegral3")));
  CHECK(table_rows(n, downarrow(n).table) == std::vector<std::string>{"(0,0,0)", "(1,u,0)", "(1,1,0)"});
}

TEST_CASE("duals of canonical Omega") {
  for (auto name : {"boolean2", "lukasiewicz:3", "lukasiewicz:5", "nonintegral3"}) {
    CAPTURE(name);
    CHECK(is_cd(certify_complete(dual(canonical_omega(builtin(name))))).cd);
  }
  auto g3 = is_cd(certify_complete(dual(canonical_omega(builtin("goedel:3")))));
  CHECK_FALSE(g3.cd);
  CHECK(g3.equation == "sup(phi meet psi) = sup phi meet sup psi");
  CHECK(g3.witness == "(0,1,1),(u,u,u)");
  CHECK_FALSE(is_cd(certify_complete(dual(canonical_omega(builtin("goedel:4"))))).cd);

  auto g = certify_complete(dual(canonical_omega(builtin("goedel:3"))));
  try {
    downarrow(g);
    FAIL("expected NotCD");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotCD);
  }
}

TEST_CASE("meet-irreducible scan agrees with the full pair scan") {
  std::vector<CompleteOmegaLattice> cases;
  for (auto name : {"boolean2", "lukasiewicz:3", "goedel:3", "nonintegral3", "goedel:4"}) {
    auto q = builtin(name);
    cases.push_back(certify_complete(canonical_omega(q)));
    cases.push_back(certify_complete(dual(canonical_omega(q))));
  }
  auto b = builtin("boolean2");
  cases.push_back(certify_complete(product(b, {chain_category(b, 2), chain_category(b, 2)})));
  for (const auto& l : cases) {
    CAPTURE(l.cat().label());
    auto lower = enumerate_presheaves(l.cat(), Variance::Lower);
    auto fast = is_cd(l, lower, MeetScan::Irreducibles, kernels::ExecPolicy::Parallel);
    auto full = is_cd(l, lower, MeetScan::AllPairs, kernels::ExecPolicy::Reference);
    CHECK(fast.cd == full.cd);
    CHECK(fast.equation == full.equation);
  }
}

TEST_CASE("meet-irreducible presheaves") {
  const std::vector<std::pair<const char*, std::size_t>> expected{
      {"boolean2", 2}, {"lukasiewicz:3", 6}, {"goedel:3", 5}, {"nonintegral3", 4}};
  for (const auto& [name, count] : expected) {
    CAPTURE(name);
    auto c = canonical_omega(builtin(name));
    CHECK(meet_irreducibles(c, enumerate_presheaves(c, Variance::Lower)).size() == count);
  }
}

TEST_CASE("presheaf lattices") {
  auto b = builtin("boolean2");
  auto luk = builtin("lukasiewicz:3");
  const std::vector<std::tuple<OmegaCategory, std::size_t, std::size_t>> expected{
      {terminal(b), 2, 3},  {chain_category(b, 2), 3, 4}, {discrete(b, 3), 8, 20},
      {terminal(luk), 3, 8}, {chain_category(luk, 2), 6, 20}, {discrete(luk, 3), 27, 6048}};
  for (const auto& [a, inner, outer] : expected) {
    CAPTURE(a.label());
    auto p = presheaf_downarrow(a);
    CHECK(p.lattice.size() == inner);
    CHECK(p.generic.lower.size() == outer);
    CHECK_ALL_OK(p.checks);
  }
}

TEST_CASE("products") {
  auto b = builtin("boolean2");
  auto chain = certify_complete(chain_category(b, 2));
  auto sq = product_downarrow(b, {chain, chain});
  CHECK(sq.product.lattice.size() == 4);
  CHECK_ALL_OK(sq.checks);

  auto luk = builtin("lukasiewicz:3");
  auto o = certify_complete(canonical_omega(luk));
  CHECK_ALL_OK(product_downarrow(luk, {o, o}).checks);

  auto empty = product_downarrow(luk, {});
  CHECK(table_rows(empty.product.lattice, empty.table) == std::vector<std::string>{"(0)"});
}

TEST_CASE("classical complete distributivity") {
  CHECK(classical_cd(FiniteLattice::chain(4)));
  CHECK_FALSE(classical_cd(diamond()));
  CHECK(classical_cd_witness(diamond()).has_value());
  auto l = certify_complete(canonical_omega(builtin("lukasiewicz:3")));
  CHECK(underlying_lattice(l).is_chain());
  for (auto name : {"boolean2", "lukasiewicz:3", "nonintegral3"}) {
    auto q = builtin(name);
    CHECK_ALL_OK(classical_cd_check(q, {certify_complete(canonical_omega(q))}));
  }
}
