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

#include <algorithm>

#include "oql/cd.hpp"
#include "oql/structure.hpp"
#include "support.hpp"

using namespace oql;

namespace {

CompleteOmegaLattice canon(const char* name) { return certify_complete(canonical_omega(builtin(name))); }

CompleteOmegaLattice square() {
  auto b = builtin("boolean2");
  return certify_complete(product(b, {chain_category(b, 2), chain_category(b, 2)}));
}

std::size_t index_of(const std::vector<ObjectMap>& maps, const ObjectMap& f) {
  return static_cast<std::size_t>(std::find(maps.begin(), maps.end(), f) - maps.begin());
}

}  // namespace

TEST_CASE("subalgebras and closures") {
  const std::vector<std::pair<const char*, std::size_t>> expected{
      {"boolean2", 1}, {"lukasiewicz:3", 1}, {"goedel:3", 1}, {"nonintegral3", 2}};
  for (const auto& [name, count] : expected) {
    CAPTURE(name);
    auto l = canon(name);
    CHECK(enumerate_subalgebras(l).size() == count);
    CHECK(enumerate_cocontinuous_closures(l).size() == count);
    auto rep = closure_bijection_check(l);
    CHECK(rep.left_count == count);
    CHECK(rep.right_count == count);
    CHECK_ALL_OK(rep.checks);
  }
  auto sq = square();
  CHECK(enumerate_subalgebras(sq).size() == 4);
  CHECK_ALL_OK(closure_bijection_check(sq).checks);
}

TEST_CASE("subsets that are not subalgebras") {
  auto l = canon("lukasiewicz:3");
  CHECK_FALSE(is_subalgebra(l, {0, 2}).all_ok());  // u >-> 0 = u
  CHECK_FALSE(closed_subset(l, {0, 2}));
  CHECK_FALSE(closed_subset(l, {0}));
  CHECK(is_subalgebra(l, {0, 1, 2}).all_ok());
  auto checks = is_subalgebra(l, {0, 2});
  REQUIRE(checks.find("conditions_agree") != nullptr);
  CHECK(checks.find("conditions_agree")->ok);
  CHECK_FALSE(closure_operator_check(l, constant_map(3, 2)).all_ok());
  CHECK(subalgebra_of_closure(identity_map(3)) == std::vector<Index>{0, 1, 2});
  CHECK(closure_of_subalgebra(l, {0, 1, 2}) == identity_map(3));
}

TEST_CASE("quotients and kernels") {
  const std::vector<std::pair<const char*, std::size_t>> expected{
      {"boolean2", 2}, {"lukasiewicz:3", 2}, {"goedel:3", 3}, {"nonintegral3", 2}};
  for (const auto& [name, count] : expected) {
    CAPTURE(name);
    auto l = canon(name);
    auto kernels = enumerate_cocontinuous_kernels(l);
    CHECK(kernels.size() == count);
    auto rep = kernel_bijection_check(l);
    CHECK(rep.left_count == count);
    CHECK(rep.right_count == count);
    CHECK_ALL_OK(rep.checks);
    for (const auto& k : kernels) {
      CHECK_ALL_OK(kernel_operator_check(l, k));
      auto pres = quotient_of_kernel(l, k);
      CHECK_ALL_OK(pres.checks);
      CHECK(kernel_of_quotient(l, pres.lattice, pres.quotient) == k);
    }
  }
  auto sq = square();
  auto kernels = enumerate_cocontinuous_kernels(sq);
  CHECK(kernels.size() == 4);
  std::vector<std::size_t> classes;
  for (const auto& k : kernels) classes.push_back(quotient_of_kernel(sq, k).classes.size());
  std::sort(classes.begin(), classes.end());
  CHECK(classes == std::vector<std::size_t>{1, 2, 2, 4});
}

TEST_CASE("CD transfers to subalgebras and quotients") {
  auto l = canon("nonintegral3");
  auto down = downarrow(l);
  for (const auto& s : enumerate_subalgebras(l)) CHECK_ALL_OK(subalgebra_cd(l, down, s).checks);
  for (const auto& k : enumerate_cocontinuous_kernels(l)) {
    auto pres = quotient_of_kernel(l, k);
    CHECK_ALL_OK(quotient_cd(l, down, pres.lattice, pres.quotient).checks);
  }
}

TEST_CASE("decomposition through the power of Omega") {
  auto b = builtin("boolean2");
  auto rb = raney_buchi(canon("boolean2"));
  CHECK(rb.ambient.size() == 4);
  CHECK(rb.presheaves.size() == 3);
  CHECK_ALL_OK(rb.checks);
  CHECK(compose(rb.sup, rb.down) == identity_map(2));

  auto rl = raney_buchi(canon("lukasiewicz:3"));
  CHECK(rl.ambient.size() == 27);
  CHECK(rl.presheaves.size() == 8);
  CHECK_ALL_OK(rl.checks);

  CHECK_ALL_OK(raney_buchi(certify_complete(chain_category(b, 2))).checks);
  CHECK_ALL_OK(raney_buchi(certify_complete(terminal(b))).checks);
}

TEST_CASE("kernel on functors") {
  const std::vector<std::tuple<const char*, std::size_t, std::size_t>> expected{
      {"boolean2", 3, 2}, {"lukasiewicz:3", 8, 3}, {"goedel:3", 8, 3}, {"nonintegral3", 5, 3}};
  for (const auto& [name, functors, lefts] : expected) {
    CAPTURE(name);
    auto l = canon(name);
    auto k = functor_kernel(l, l);
    CHECK(k.left.functors.maps.size() == functors);
    CHECK(k.left.left_adjoints.size() == lefts);
    CHECK(k.fixed == k.cocontinuous);
    CHECK_ALL_OK(k.checks);
  }

  auto b = builtin("boolean2");
  auto chain = certify_complete(chain_category(b, 2));
  auto k = functor_kernel(chain, chain);
  const auto& maps = k.left.functors.maps;
  const ObjectMap bot_bot{0, 0}, bot_top{0, 1}, top_top{1, 1};
  CHECK(k.fixed == std::vector<Index>{static_cast<Index>(index_of(maps, bot_bot)),
                                      static_cast<Index>(index_of(maps, bot_top))});
  CHECK(maps[k.kernel[index_of(maps, top_top)]] == bot_top);
  CHECK_ALL_OK(k.checks);
}

TEST_CASE("adjoint duality") {
  auto b = builtin("boolean2");
  CHECK_ALL_OK(right_adjoint_duality(chain_category(b, 2), chain_category(b, 2)));
  auto q = builtin("lukasiewicz:3");
  CHECK_ALL_OK(right_adjoint_duality(canonical_omega(q), canonical_omega(q)));
}
