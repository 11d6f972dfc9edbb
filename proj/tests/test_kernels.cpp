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

#include <random>

#include "oql/cd.hpp"
#include "oql/kernels.hpp"
#include "oql/quantale.hpp"
#include "support.hpp"

using namespace oql;
using kernels::ExecPolicy;

namespace {

kernels::FunctorSearch search_for(const OmegaCategory& a, const OmegaCategory& b) {
  kernels::FunctorSearch s;
  s.dom_size = a.size();
  s.cod_size = b.size();
  s.dom_hom = a.hom_table();
  s.cod_hom = b.hom_table();
  s.omega_leq = a.omega().lattice().leq_table();
  s.omega_size = a.omega().size();
  return s;
}

std::vector<std::string> names(const std::vector<QuantalePtr>& qs) {
  std::vector<std::string> out;
  for (const auto& q : qs) out.push_back(q->name());
  return out;
}

}  // namespace

TEST_CASE("functor enumeration: reference and parallel agree") {
  const Budget budget = Budget::standard();
  for (auto name : {"boolean2", "lukasiewicz:3", "goedel:4", "lukasiewicz:5", "nonintegral3"}) {
    CAPTURE(name);
    auto q = builtin(name);
    auto c = canonical_omega(q);
    auto s = search_for(c, c);
    auto ref = kernels::enumerate_functors(s, ExecPolicy::Reference, budget);
    auto par = kernels::enumerate_functors(s, ExecPolicy::Parallel, budget);
    CHECK(ref.count == par.count);
    CHECK(ref.data == par.data);
  }
  auto q = builtin("lukasiewicz:3");
  auto omega = canonical_omega(q);
  auto sq = product(q, {omega, omega});
  auto s = search_for(sq, omega);
  s.allowed.assign(sq.size(), {0, 1, 2});
  s.allowed[0] = {0};
  auto ref = kernels::enumerate_functors(s, ExecPolicy::Reference, Budget::standard());
  auto par = kernels::enumerate_functors(s, ExecPolicy::Parallel, Budget::standard());
  CHECK(ref.count > 0);
  CHECK(ref.data == par.data);
  CHECK_THROWS_AS(kernels::enumerate_functors(s, ExecPolicy::Parallel, Budget{5}), Error);
}

TEST_CASE("tensor enumeration: reference and parallel agree") {
  auto diamond = FiniteLattice::from_relation({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  for (const auto& lat : {FiniteLattice::chain(3), FiniteLattice::chain(4), diamond}) {
    EnumerateOptions ref, par;
    ref.policy = ExecPolicy::Reference;
    par.policy = ExecPolicy::Parallel;
    auto a = names(enumerate_quantales(lat, ref));
    auto b = names(enumerate_quantales(lat, par));
    CHECK_FALSE(a.empty());
    CHECK(a == b);
  }
}

TEST_CASE("first_failure: reference and parallel agree") {
  std::mt19937 rng(7);
  for (int round = 0; round < 50; ++round) {
    const std::size_t n = rng() % 2000;
    std::vector<char> good(n);
    for (auto& g : good) g = (rng() % 100) != 0;
    auto pred = [&](std::size_t i) { return good[i] != 0; };
    CHECK(kernels::first_failure(n, pred, ExecPolicy::Reference) ==
          kernels::first_failure(n, pred, ExecPolicy::Parallel));
  }
  CHECK(kernels::first_failure(0, [](std::size_t) { return false; }) == 0);
  CHECK(kernels::thread_count() >= 1);
}

TEST_CASE("presheaf and functor categories: reference and parallel agree") {
  for (auto name : {"lukasiewicz:3", "goedel:3", "lukasiewicz:4"}) {
    auto q = builtin(name);
    auto a = product(q, {canonical_omega(q), chain_category(q, 2)});
    for (auto v : {Variance::Lower, Variance::Upper}) {
      auto ref = enumerate_presheaves(a, v, Budget::standard(), ExecPolicy::Reference);
      auto par = enumerate_presheaves(a, v, Budget::standard(), ExecPolicy::Parallel);
      REQUIRE(ref.size() == par.size());
      for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::equal(ref[i].begin(), ref[i].end(), par[i].begin()));
    }
    auto c = canonical_omega(q);
    auto fr = functor_category(c, c, Budget::standard(), ExecPolicy::Reference);
    auto fp = functor_category(c, c, Budget::standard(), ExecPolicy::Parallel);
    CHECK(fr.maps == fp.maps);
    CHECK(fr.category == fp.category);
  }
}

TEST_CASE("CD scan: every policy and scan agree") {
  for (auto name : {"boolean2", "lukasiewicz:3", "goedel:3", "goedel:4", "nonintegral3"}) {
    auto q = builtin(name);
    for (const auto& cat : {canonical_omega(q), dual(canonical_omega(q))}) {
      CAPTURE(cat.label());
      auto l = certify_complete(cat);
      auto lower = enumerate_presheaves(cat, Variance::Lower);
      std::vector<CdVerdict> v;
      for (auto scan : {MeetScan::AllPairs, MeetScan::Irreducibles})
        for (auto policy : {ExecPolicy::Reference, ExecPolicy::Parallel}) v.push_back(is_cd(l, lower, scan, policy));
      for (const auto& x : v) {
        CHECK(x.cd == v[0].cd);
        CHECK(x.equation == v[0].equation);
      }
      CHECK(v[0].witness == v[1].witness);
      CHECK(v[2].witness == v[3].witness);
    }
  }
}
