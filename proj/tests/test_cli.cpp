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

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run oql(const std::string& args) {
  const std::string cmd = std::string(OQL_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& contents) {
  auto dir = std::filesystem::temp_directory_path() / "oql_test_cli";
  std::filesystem::create_directories(dir);
  auto path = (dir / name).string();
  std::ofstream(path) << contents;
  return path;
}

}  // namespace

TEST_CASE("quantale commands") {
  auto r = oql("quantale classify --builtin lukasiewicz:3 --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["data"]["classes"]["mv"] == true);

  auto g = nlohmann::json::parse(oql("quantale classify --builtin goedel:3 --format json").out);
  CHECK(g["data"]["classes"]["girard"] == false);
  CHECK(g["data"]["witnesses"]["girard"] == "u");

  auto bad = temp_file("bad.json", R"({"name": "bad", "elements": ["0","a","1"], "leq": [["0","a"],["a","1"]],
    "unit": "1", "tensor": {"0,0": "0", "0,a": "0", "0,1": "0", "a,a": "1", "a,1": "a", "1,1": "1"}})");
  r = oql("quantale verify " + bad);
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL laws: NotMonotone") != std::string::npos);

  auto broken = temp_file("broken.json", "{\"elements\": [\"0\", }");
  r = oql("quantale verify --file " + broken);
  CHECK(r.code == 2);
  CHECK(r.out.find("broken.json:1:") != std::string::npos);

  r = oql("quantale enumerate --chain 2 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["data"]["structures"]["chain2"] == 1);

  CHECK(oql("quantale classify --builtin nosuch").code == 2);
  CHECK(oql("quantale frobnicate").code == 2);
}

TEST_CASE("lattice and CD commands") {
  auto r = oql("cd check --builtin goedel:3 --dual");
  CHECK(r.code == 1);
  CHECK(r.out.find("predicted by non-Girard goedel3") != std::string::npos);

  r = oql("cd check --builtin lukasiewicz:3 --down --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["data"]["down"]["u"]["1"] == "u");

  CHECK(oql("lat certify --builtin nonintegral3").code == 0);
  CHECK(oql("cat check --builtin lukasiewicz:3").code == 0);

  auto cat = temp_file("cat.json", R"({"quantale": "boolean2", "objects": ["bot","top"],
    "hom": {"bot,top": "1", "top,bot": "0"}})");
  CHECK(oql("cd check --file " + cat).code == 0);
  auto discrete = temp_file("discrete.json", R"({"quantale": "lukasiewicz:3", "objects": ["a","b"],
    "hom": {"a,b": "0", "b,a": "0"}})");
  r = oql("lat certify --file " + discrete);
  CHECK(r.code == 1);
  CHECK(r.out.find("UnderlyingNotComplete") != std::string::npos);
}

TEST_CASE("structure and duality commands") {
  auto r = oql("struct raney-buchi --builtin boolean:2 --format json");
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["data"]["presheaves"] == 3);

  CHECK(oql("struct bijections --builtin nonintegral3").code == 0);
  CHECK(oql("struct kernel --builtin boolean2").code == 0);

  r = oql("girard duality --builtin lukasiewicz:3 --format json");
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["data"]["girard"] == true);
  CHECK(j["data"]["heyting_op"] == true);
  CHECK(j["stamps"]["scope"].get<std::string>().rfind("corpus: ", 0) == 0);

  r = oql("girard duality --builtin goedel:3 --format json");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["data"]["witness"] == "u");

  CHECK(oql("girard free --builtin boolean2").code == 0);
  r = oql("girard free --builtin goedel:3");
  CHECK(r.code == 1);
  CHECK(r.out.find("NotGirard") != std::string::npos);
  CHECK(oql("girard free --builtin goedel:3 --experimental").code == 1);
}

TEST_CASE("budget and determinism") {
  auto r = oql("cat check --builtin lukasiewicz:5 --budget 10");
  CHECK(r.code == 3);
  CHECK(r.out.find("budget:") != std::string::npos);

  auto a = oql("mine --chain 2..3 --format json");
  auto b = oql("mine --chain 2..3 --format json --shards 4");
  auto c = oql("mine --chain 2..3 --format json");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == c.out);
  CHECK(nlohmann::json::parse(a.out)["summary"]["failed"] == 0);

  auto out = (std::filesystem::temp_directory_path() / "oql_test_cli" / "mine.json").string();
  CHECK(oql("mine --chain 2 --format json --out " + out).code == 0);
  std::ifstream in(out);
  CHECK(nlohmann::json::parse(in)["command"] == "mine --chain 2..2");
}
