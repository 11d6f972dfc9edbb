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

#include <set>

#include "oql/quantale.hpp"
#include "support.hpp"

using namespace oql;

namespace {

// Residual tables of the canonical chains, from tests/oracle/oracle.py.
const std::vector<Elem> kLuk3Residual{2, 2, 2, 1, 2, 2, 0, 1, 2};
const std::vector<Elem> kGoedel3Residual{2, 2, 2, 0, 2, 2, 0, 1, 2};
const std::vector<Elem> kNonintegral3Residual{2, 2, 2, 0, 1, 2, 0, 0, 2};

QuantaleSpec chain3_spec(Elem unit, std::vector<Elem> tensor) {
  return {"t", FiniteLattice::chain({"0", "a", "1"}), unit, std::move(tensor)};
}

}  // namespace

TEST_CASE("built-ins satisfy every residuation identity") {
  for (auto name : {"boolean2", "lukasiewicz:3", "lukasiewicz:4", "lukasiewicz:5", "goedel:3", "goedel:4", "goedel:5",
                    "nonintegral3"}) {
    CAPTURE(name);
    auto q = builtin(name);
    auto checks = check_residuation_laws(*q);
    CHECK(checks.items().size() == 10);
    CHECK_ALL_OK(checks);
  }
}

TEST_CASE("residual tables") {
  CHECK(builtin("lukasiewicz:3")->residual_table() == kLuk3Residual);
  CHECK(builtin("goedel:3")->residual_table() == kGoedel3Residual);
  CHECK(builtin("nonintegral3")->residual_table() == kNonintegral3Residual);
  auto b = builtin("boolean2");
  CHECK(b->imp(1, 0) == 0);
  CHECK(b->imp(0, 0) == 1);
}

TEST_CASE("residuation agrees with the table") {
  for (auto name : {"lukasiewicz:4", "goedel:4", "nonintegral3"}) {
    auto q = builtin(name);
    for (Elem a = 0; a < q->size(); ++a)
      for (Elem b = 0; b < q->size(); ++b) CHECK(residuate(*q, a, b) == q->imp(a, b));
  }
}

TEST_CASE("classification") {
  for (std::size_t n = 3; n <= 5; ++n) {
    auto l = classify(*builtin_lukasiewicz(n));
    CHECK(l.mv);
    CHECK(l.girard);
    auto g = classify(*builtin_goedel(n));
    CHECK(g.bl);
    CHECK_FALSE(g.girard);
    CHECK_FALSE(g.mv);
  }
  auto g3 = classify(*builtin("goedel:3"));
  REQUIRE(g3.witness("girard") != nullptr);
  CHECK(g3.witness("girard")->front() == "u");

  auto ni = classify(*builtin("nonintegral3"));
  CHECK_FALSE(ni.integral);
  CHECK_FALSE(ni.girard);
  CHECK(classify(*builtin("boolean2")).mv);
}

TEST_CASE("diagnosis of broken tables") {
  SUBCASE("not monotone") {
    auto d = diagnose_quantale(chain3_spec(2, {0, 0, 0, 0, 2, 1, 0, 1, 2}));
    REQUIRE_FALSE(d.ok());
    CHECK(d.error->kind() == ErrorKind::NotMonotone);
    CHECK_FALSE(d.error->witness().empty());
  }
  SUBCASE("not commutative") {
    auto spec = chain3_spec(2, {0, 0, 0, 0, 0, 1, 0, 1, 2});
    CHECK(diagnose_quantale(spec).ok());
    spec.tensor[1 * 3 + 0] = 1;  // a*0 = a, 0*a = 0
    auto d = diagnose_quantale(spec);
    REQUIRE_FALSE(d.ok());
    CHECK_FALSE(d.commutative);
  }
  SUBCASE("unit law") {
    auto d = diagnose_quantale(chain3_spec(2, {0, 0, 0, 0, 1, 0, 0, 0, 2}));
    REQUIRE_FALSE(d.ok());
  }
  CHECK_THROWS_AS(verify_quantale(chain3_spec(2, {0, 0, 0, 0, 2, 1, 0, 1, 2})), Error);
}

TEST_CASE("builtin names") {
  CHECK(builtin("lukasiewicz3")->size() == 3);
  CHECK(builtin("goedel:4")->size() == 4);
  CHECK(builtin("boolean:2")->size() == 2);
  try {
    builtin("goedel:1");
    FAIL("expected BadSize");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadSize);
  }
  try {
    builtin("heyting:3");
    FAIL("expected InvalidArgument");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidArgument);
  }
}

TEST_CASE("enumeration on chains") {
  CHECK(enumerate_quantales(FiniteLattice::chain(2)).size() == 1);
  auto three = enumerate_quantales(FiniteLattice::chain(3));
  CHECK(three.size() == 3);
  std::set<std::string> names;
  for (const auto& q : three) {
    names.insert(q->name());
    CHECK_ALL_OK(check_residuation_laws(*q));
  }
  CHECK(names.size() == 3);

  SUBCASE("shards partition the result") {
    auto four = enumerate_quantales(FiniteLattice::chain(4));
    std::set<std::string> all, merged;
    for (const auto& q : four) all.insert(q->name());
    for (std::size_t s = 0; s < 3; ++s) {
      EnumerateOptions o;
      o.shard = s;
      o.shards = 3;
      for (const auto& q : enumerate_quantales(FiniteLattice::chain(4), o)) CHECK(merged.insert(q->name()).second);
    }
    CHECK(all == merged);
  }
}
