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

#include "oql/category.hpp"
#include "support.hpp"

using namespace oql;

TEST_CASE("canonical Omega presheaf counts") {
  // name, lower, upper (tests/oracle/oracle.py)
  const std::vector<std::tuple<const char*, std::size_t, std::size_t>> expected{
      {"boolean2", 3, 3}, {"lukasiewicz:3", 8, 8}, {"goedel:3", 7, 8}, {"nonintegral3", 5, 5}, {"lukasiewicz:5", 48, 48}};
  for (const auto& [name, lower, upper] : expected) {
    CAPTURE(name);
    auto c = canonical_omega(builtin(name));
    CHECK(enumerate_presheaves(c, Variance::Lower).size() == lower);
    CHECK(enumerate_presheaves(c, Variance::Upper).size() == upper);
  }
}

TEST_CASE("lower presheaves on canonical Lukasiewicz-3") {
  auto c = canonical_omega(builtin("lukasiewicz:3"));
  auto lower = enumerate_presheaves(c, Variance::Lower);
  const std::vector<std::string> rows{"(0,0,0)", "(u,0,0)", "(u,u,0)", "(u,u,u)",
                                      "(1,u,0)", "(1,u,u)", "(1,1,u)", "(1,1,1)"};
  CHECK(test::rows(c, lower) == rows);
  for (std::size_t i = 0; i < lower.size(); ++i) CHECK(lower.index_of(lower[i]) == i);
}

TEST_CASE("Yoneda and closures") {
  for (auto name : {"boolean2", "lukasiewicz:3", "goedel:3", "nonintegral3"}) {
    CAPTURE(name);
    auto c = canonical_omega(builtin(name));
    CHECK_ALL_OK(yoneda_check(c));
    CHECK_ALL_OK(closure_check(c));
    CHECK_ALL_OK(yoneda_check(dual(c)));
  }
  auto q = builtin("lukasiewicz:3");
  CHECK_ALL_OK(yoneda_check(discrete(q, 2)));
  CHECK_ALL_OK(yoneda_check(chain_category(q, 3)));
}

TEST_CASE("constructions") {
  auto q = builtin("lukasiewicz:3");
  auto c = canonical_omega(q);
  CHECK(c.label() == "Omega(lukasiewicz3)");
  CHECK(dual(c).label() == "Omega(lukasiewicz3)^op");
  CHECK(dual(dual(c)) == c);
  CHECK(dual(c).hom(0, 2) == c.hom(2, 0));

  auto chain = chain_category(q, 2);
  CHECK(chain.objects() == std::vector<std::string>{"bot", "top"});
  CHECK(chain.hom(0, 1) == q->unit());
  CHECK(chain.hom(1, 0) == q->bottom());

  auto sq = product(q, {chain, chain});
  CHECK(sq.size() == 4);
  CHECK(sq.object(1) == "(bot,top)");
  CHECK(terminal(q).hom(0, 0) == q->top());
  CHECK(discrete(q, 3).hom(0, 1) == q->bottom());
  CHECK(subcategory(c, {0, 2}).objects() == std::vector<std::string>{"0", "1"});
  CHECK(is_antisymmetric(c));
  CHECK_FALSE(is_antisymmetric(check_category(q, {"a", "b"}, {2, 2, 2, 2})));
}

TEST_CASE("category axioms are enforced") {
  auto q = builtin("lukasiewicz:3");
  try {
    check_category(q, {"a", "b"}, {1, 0, 0, 2});
    FAIL("expected ReflexivityFails");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ReflexivityFails);
  }
  try {
    // a->b = 1, b->c = 1, a->c = 0
    check_category(q, {"a", "b", "c"}, {2, 2, 0, 0, 2, 2, 0, 0, 2});
    FAIL("expected TransitivityFails");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TransitivityFails);
  }
}

TEST_CASE("functors and adjunctions") {
  auto q = builtin("lukasiewicz:3");
  auto c = canonical_omega(q);
  CHECK(functor_category(c, c).maps.size() == 8);
  auto b = builtin("boolean2");
  auto chain = chain_category(b, 2);
  CHECK(functor_category(chain, chain).category.size() == 3);

  CHECK(is_functor(c, c, identity_map(3)));
  CHECK_FALSE(is_functor(c, c, {2, 1, 0}));
  CHECK(functor_violation(c, c, {2, 1, 0}).has_value());

  auto rights = find_right_adjoints(c, c, constant_map(3, 0));
  REQUIRE(rights.size() == 1);
  CHECK(rights[0] == constant_map(3, 2));
  CHECK(is_adjunction(c, c, {constant_map(3, 0), constant_map(3, 2)}));
  CHECK(find_left_adjoints(c, c, constant_map(3, 2)) == std::vector<ObjectMap>{constant_map(3, 0)});
  CHECK_ALL_OK(adjunction_properties(c, c, {identity_map(3), identity_map(3)}));
  // the constant top functor preserves no bottom, so it has no right adjoint
  CHECK(find_right_adjoints(c, c, constant_map(3, 2)).empty());
}

TEST_CASE("Kan extensions") {
  auto q = builtin("lukasiewicz:3");
  auto c = canonical_omega(q);
  auto chain = chain_category(q, 2);
  CHECK_ALL_OK(kan_check(chain, c, {0, 2}));
  CHECK_ALL_OK(kan_check(c, c, identity_map(3)));
  CHECK_ALL_OK(kan_check(terminal(q), c, {1}));
  std::vector<Elem> phi{2, 1, 0};
  CHECK(pullback({2, 0}, phi) == std::vector<Elem>{0, 2});
}

TEST_CASE("presheaf category") {
  auto b = builtin("boolean2");
  auto chain = chain_category(b, 2);
  auto lower = enumerate_presheaves(chain, Variance::Lower);
  auto p = presheaf_category(chain, lower);
  CHECK(p.size() == 3);
  CHECK(p.label() == "[chain(2)^op,Omega]");
  CHECK(all_functions(discrete(b, 2)).size() == 4);
  CHECK(presheaf_hom(*b, lower[2], lower[0]) == 0);
  CHECK(presheaf_hom(*b, lower[0], lower[2]) == 1);
}
