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

#include <filesystem>
#include <fstream>

#include "oql/io.hpp"
#include "oql/mining.hpp"
#include "oql/report.hpp"
#include "support.hpp"

using namespace oql;

namespace {

const char* kLuk3 = R"({
  "name": "l3",
  "elements": ["0", "u", "1"],
  "leq": [["0", "u"], ["u", "1"]],
  "unit": "1",
  "tensor": {"0,0": "0", "0,u": "0", "0,1": "0", "u,u": "0", "1,u": "u", "1,1": "1"}
})";

Error parse_error(std::string_view text, bool category = false) {
  try {
    if (category)
      category_from_json(text, "t.json");
    else
      quantale_spec_from_json(text, "t.json");
  } catch (const Error& e) {
    return e;
  }
  return Error(ErrorKind::Internal, "no error");
}

}  // namespace

TEST_CASE("quantale files") {
  auto spec = quantale_spec_from_json(kLuk3);
  auto q = verify_quantale(spec);
  CHECK(q->name() == "l3");
  CHECK(q->tensor_table() == builtin("lukasiewicz:3")->tensor_table());
  CHECK(q->tensor(2, 1) == 1);
  CHECK(q->tensor(1, 2) == 1);  // mirrored

  auto e = parse_error(R"({"elements": ["0","1"], "leq": [["0","1"]], "unit": "1",
  "tensor": {"0,0": "0", "0,1": "0", "1,1": "x"}})");
  CHECK(e.kind() == ErrorKind::Parse);
  CHECK(std::string(e.what()).find("t.json:2:") != std::string::npos);
  CHECK(e.witness() == std::vector<std::string>{"x"});

  CHECK(parse_error(R"({"elements": ["0","1"], "leq": [["0","1"]], "unit": "1", "tensor": {"0,0": "0", "1,1": "1"}})")
            .kind() == ErrorKind::Parse);
  CHECK(parse_error(R"({"elements": ["0","1"], "leq": [], "unit": "1", "tensor": {"0,0": "0", "1,1": "1"}})").kind() ==
        ErrorKind::LatticeInvalid);
  auto syntax = parse_error("{\n  \"elements\": [\"0\",\n}");
  CHECK(syntax.kind() == ErrorKind::Parse);
  CHECK(std::string(syntax.what()).find("t.json:3:") != std::string::npos);
  CHECK(parse_error(R"({"elements": ["0","1"], "leq": [["0","1"]], "unit": "1", "tensor": {"01": "0"}})").kind() ==
        ErrorKind::Parse);
}

TEST_CASE("quantale files round-trip") {
  for (auto name : {"lukasiewicz:4", "goedel:3", "nonintegral3"}) {
    auto q = builtin(name);
    auto back = verify_quantale(quantale_spec_from_json(quantale_to_json(*q)));
    CHECK(back->tensor_table() == q->tensor_table());
    CHECK(back->unit() == q->unit());
    CHECK(back->lattice() == q->lattice());
  }
}

TEST_CASE("category files") {
  auto a = category_from_json(R"({"quantale": "lukasiewicz:3", "objects": ["a","b"],
                                  "hom": {"a,b": "u", "b,a": "0"}})");
  CHECK(a.size() == 2);
  CHECK(a.hom(0, 0) == 2);
  CHECK(a.hom(0, 1) == 1);

  auto inline_q = std::string(R"({"quantale": )") + kLuk3 + R"(, "objects": ["p"], "hom": {}})";
  CHECK(category_from_json(inline_q).omega().name() == "l3");

  auto missing = parse_error(R"({"quantale": "boolean2", "objects": ["a","b"], "hom": {"a,b": "1"}})", true);
  CHECK(missing.kind() == ErrorKind::Parse);
  CHECK(parse_error(R"({"quantale": "boolean2", "objects": ["a"], "hom": {"a,c": "1"}})", true).kind() ==
        ErrorKind::Parse);
  CHECK_THROWS_AS(category_from_json(R"({"quantale": "boolean2", "objects": ["a","b"],
                                         "hom": {"a,b": "1", "b,a": "1", "a,a": "0"}})"),
                  Error);
}

TEST_CASE("reports") {
  Report r("oql test");
  CheckList cl;
  cl.pass("zeta");
  cl.fail("alpha", "w1");
  cl.skip("mid", "reason");
  r.add(cl, "p.");
  r.add({"bare_failure", false, "", false, ""});
  CHECK(r.passed() == 1);
  CHECK(r.failed() == 2);
  CHECK(r.skipped() == 1);
  CHECK(r.exit_code() == kExitFail);

  auto j = nlohmann::json::parse(r.json());
  std::vector<std::string> names;
  for (const auto& c : j["checks"]) names.push_back(c["name"]);
  CHECK(names == std::vector<std::string>{"bare_failure", "p.alpha", "p.mid", "p.zeta"});
  CHECK(j["checks"][0]["witness"] == "unreported");
  CHECK_FALSE(j.contains("timing"));
  r.timing("x", 1.5);
  CHECK(nlohmann::json::parse(r.json(true)).contains("timing"));
  CHECK(r.json() == r.json());

  auto text = r.text();
  CHECK(text.find("FAIL p.alpha") < text.find("ok   p.zeta"));

  Report b;
  b.budget_skip("big", Error(ErrorKind::SizeBound, "too many"));
  CHECK(b.exit_code() == kExitBudget);
  CHECK(b.checks()[0].note.rfind("budget: ", 0) == 0);
  CHECK(Report().exit_code() == kExitPass);
}

TEST_CASE("totally-below serialization") {
  auto l = certify_complete(canonical_omega(builtin("lukasiewicz:3")));
  auto j = downarrow_json(l, downarrow(l));
  CHECK(j["u"]["0"] == "u");
  CHECK(j["u"]["1"] == "u");
  CHECK(j["1"]["u"] == "1");
}

TEST_CASE("category enumeration") {
  auto q = builtin("lukasiewicz:3");
  CHECK(enumerate_categories(q, 1).size() == 1);
  CHECK(enumerate_categories(q, 3).size() == 281);  // tests/oracle/oracle.py
  CHECK_THROWS_AS(enumerate_categories(q, 3, Budget{10}), Error);
}

TEST_CASE("theorem suite on built-ins") {
  for (auto name : {"boolean2", "lukasiewicz:3", "goedel:3", "nonintegral3"}) {
    CAPTURE(name);
    auto r = theorem_suite(builtin(name));
    CHECK(r.failed() == 0);
    CHECK(r.passed() > 100);
  }
}

TEST_CASE("mining is independent of sharding") {
  MineOptions o;
  o.chain_lo = 2;
  o.chain_hi = 3;
  auto one = mine(o);
  o.shards = 3;
  auto three = mine(o);
  CHECK(one.failed() == 0);
  CHECK(one.json() == three.json());
  auto j = nlohmann::json::parse(one.json());
  CHECK(j["data"]["structures"]["chain2"] == 1);
  CHECK(j["data"]["structures"]["chain3"] == 3);
  CHECK(j["command"] == "mine --chain 2..3");
}

TEST_CASE("lattice files") {
  auto dir = std::filesystem::temp_directory_path() / "oql_test_io";
  std::filesystem::create_directories(dir);
  auto path = (dir / "m3.json").string();
  std::ofstream(path) << R"({"name": "m3", "elements": ["0","a","b","c","1"],
    "leq": [["0","a"],["0","b"],["0","c"],["a","1"],["b","1"],["c","1"]]})";
  std::string name;
  auto lat = load_lattice(path, &name);
  CHECK(name == "m3");
  CHECK(lat.size() == 5);
  CHECK_FALSE(lat.is_chain());
  CHECK_THROWS_AS(load_lattice((dir / "missing.json").string()), Error);
}
