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
#include "oql/girard.hpp"
#include "oql/mining.hpp"
#include "support.hpp"

using namespace oql;

namespace {

std::vector<QuantalePtr> sample_quantales() {
  std::vector<QuantalePtr> out{builtin("boolean2"), builtin("lukasiewicz:3"), builtin("goedel:3"),
                               builtin("nonintegral3")};
  for (const auto& q : enumerate_quantales(FiniteLattice::chain(4))) out.push_back(q);
  return out;
}

template <class T>
const T& pick(const std::vector<T>& xs, std::mt19937& rng) {
  return xs[rng() % xs.size()];
}

}  // namespace

TEST_CASE("every quantale on the 4-chain satisfies the laws and class invariants") {
  for (const auto& q : enumerate_quantales(FiniteLattice::chain(4))) {
    CAPTURE(q->name());
    CHECK_ALL_OK(check_residuation_laws(*q));
    auto k = classify(*q);
    CHECK(k.bl == (k.integral && k.divisible && k.prelinear));
    CHECK(k.mv == (k.bl && k.girard));
    CHECK((!k.girard || k.integral));
    CHECK(q->integral() == k.integral);
  }
}

TEST_CASE("canonical Omega is CD with the closed-form operator, for every sampled quantale") {
  for (const auto& q : sample_quantales()) {
    CAPTURE(q->name());
    auto l = certify_complete(canonical_omega(q));
    CHECK_ALL_OK(l.certificate());
    auto op = downarrow(l);
    CHECK(op.table == omega_closed_form(*q));
    CHECK_ALL_OK(interpolate_check(l, op));
  }
}

TEST_CASE("random small categories: Yoneda, closures, Kan extensions") {
  std::mt19937 rng(20261019);
  for (const auto& q : sample_quantales()) {
    auto cats = enumerate_categories(q, 3);
    REQUIRE_FALSE(cats.empty());
    auto omega = canonical_omega(q);
    for (int round = 0; round < 6; ++round) {
      const auto& a = pick(cats, rng);
      CAPTURE(q->name());
      CAPTURE(a.hom_table());
      CHECK_ALL_OK(yoneda_check(a));
      CHECK_ALL_OK(closure_check(a));
      CHECK(dual(dual(a)) == a);
      ObjectMap f(a.size());
      for (auto& v : f) v = static_cast<Index>(rng() % omega.size());
      if (is_functor(a, omega, f)) CHECK_ALL_OK(kan_check(a, omega, f));
      // closures land in presheaves and are idempotent
      std::vector<Elem> mu(a.size());
      for (auto& v : mu) v = static_cast<Elem>(rng() % q->size());
      auto down = down_close(a, mu);
      CHECK(is_presheaf(a, Variance::Lower, down));
      CHECK(down_close(a, down) == down);
      auto up = up_close(a, mu);
      CHECK(is_presheaf(a, Variance::Upper, up));
      CHECK(up_close(a, up) == up);
    }
  }
}

TEST_CASE("random weights: sup and inf match their characterizations") {
  std::mt19937 rng(7);
  for (const auto& q : sample_quantales()) {
    auto o = certify_complete(canonical_omega(q));
    auto sq = product_lattice(q, {o, o}).lattice;
    for (const auto* l : {&o, &sq}) {
      for (int round = 0; round < 20; ++round) {
        std::vector<Elem> phi(l->size());
        for (auto& v : phi) v = static_cast<Elem>(rng() % q->size());
        CAPTURE(q->name());
        CHECK(sup_characterized(*l, phi));
        CHECK(inf_characterized(*l, phi));
        CHECK(l->sup(phi) == l->sup(down_close(l->cat(), phi)));
        CHECK(l->inf(phi) == l->inf(up_close(l->cat(), phi)));
      }
    }
  }
}

TEST_CASE("random endomaps: adjoint search agrees with preservation") {
  std::mt19937 rng(11);
  for (const auto& q : sample_quantales()) {
    auto l = certify_complete(canonical_omega(q));
    auto functors = functor_category(l.cat(), l.cat()).maps;
    for (int round = 0; round < 5; ++round) {
      const auto& f = pick(functors, rng);
      CAPTURE(q->name());
      CHECK_ALL_OK(preservation_check(l, l, f));
      CHECK(has_right_adjoint(l, l, f) == join_tensor_failure(l, l, f).empty());
      CHECK(has_left_adjoint(l, l, f) == meet_cotensor_failure(l, l, f).empty());
    }
  }
}

TEST_CASE("Girard quantales: negation is an involutive isometry on random categories") {
  std::mt19937 rng(3);
  for (const auto& q : sample_quantales()) {
    if (!classify(*q).girard) continue;
    auto cats = enumerate_categories(q, 2);
    for (int round = 0; round < 4; ++round) {
      const auto& a = pick(cats, rng);
      CAPTURE(q->name());
      CHECK_ALL_OK(negation_iso(q, a).checks);
    }
  }
}

TEST_CASE("duality coherence on every integral sampled quantale") {
  for (const auto& q : sample_quantales()) {
    if (!q->integral()) continue;
    CAPTURE(q->name());
    auto rep = duality_check(q, default_corpus(q));
    CHECK(rep.girard == rep.heyting_op);
    CHECK(rep.girard == !rep.witness.has_value());
    CHECK_ALL_OK(rep.checks);
  }
}
