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


// Acceptance run: one line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oql/cd.hpp"
#include "oql/girard.hpp"
#include "oql/mining.hpp"
#include "oql/structure.hpp"

using namespace oql;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const CheckList& checks, const std::string& what) {
    for (const auto& c : checks.items())
      if (!c.ok && !c.skipped) return require(false, what + ": " + c.name + " " + c.witness);
  }
};

int failures = 0;

void criterion(int n, const char* title, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const Error& e) {
    o.ok = false;
    o.detail = e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.ok) ++failures;
  std::printf("criterion %2d %s  %s (%s%.2f s)\n", n, o.ok ? "PASS" : "FAIL", title,
              o.detail.empty() ? "" : (o.detail + ", ").c_str(), s);
  std::fflush(stdout);
}

const std::vector<const char*> kBuiltins{"boolean2", "lukasiewicz:3", "lukasiewicz:4", "lukasiewicz:5",
                                         "goedel:3",  "goedel:4",      "goedel:5",      "nonintegral3"};

}  // namespace

int main() {
  criterion(1, "quantale law suite and classes", [] {
    Outcome o;
    for (auto name : kBuiltins) {
      auto q = builtin(name);
      o.require(check_residuation_laws(*q), name);
      auto k = classify(*q);
      const std::string base = q->name().substr(0, 4);
      if (base == "luka") o.require(k.mv, std::string(name) + " not mv");
      if (base == "goed") o.require(k.bl && !k.girard, std::string(name) + " not bl-not-girard");
      if (base == "noni") o.require(!k.integral, "nonintegral3 integral");
    }
    o.detail = o.ok ? "8 quantales" : o.detail;
    return o;
  });

  criterion(2, "Yoneda", [] {
    Outcome o;
    for (auto name : kBuiltins) o.require(yoneda_check(canonical_omega(builtin(name))), name);
    auto q = builtin("lukasiewicz:3");
    std::size_t count = 0;
    for (std::size_t n = 1; n <= 3; ++n)
      for (const auto& a : enumerate_categories(q, n)) {
        o.require(yoneda_check(a), a.label());
        ++count;
      }
    if (o.ok) o.detail = std::to_string(count) + " categories over lukasiewicz3";
    return o;
  });

  criterion(3, "sup and inf coherence on the default corpus", [] {
    Outcome o;
    std::size_t lattices = 0;
    for (auto name : {"boolean2", "lukasiewicz:3", "goedel:3", "nonintegral3"}) {
      auto q = builtin(name);
      for (const auto& l : default_corpus(q)) {
        auto checks = sup_coherence_check(l);
        for (const auto& c : checks.items()) o.require(!c.skipped, l.cat().label() + " skipped");
        o.require(checks, l.cat().label());
        ++lattices;
      }
    }
    if (o.ok) o.detail = std::to_string(lattices) + " lattices, Omega of size <= 3";
    return o;
  });

  criterion(4, "CD of canonical Omega, closed form, interpolation", [] {
    Outcome o;
    for (auto name : kBuiltins) {
      auto q = builtin(name);
      auto l = certify_complete(canonical_omega(q));
      o.require(is_cd(l).cd, std::string(name) + " not CD");
      auto op = downarrow(l);
      o.require(op.table == omega_closed_form(*q), std::string(name) + " closed form");
      o.require(interpolate_check(l, op), name);
      if (q->size() > 3) continue;
      for (const auto& c : default_corpus(q)) {
        auto cop = downarrow(c);
        o.require(interpolate_check(c, cop), c.cat().label());
      }
    }
    return o;
  });

  criterion(5, "presheaf lattices", [] {
    Outcome o;
    for (auto name : {"boolean2", "lukasiewicz:3"}) {
      auto q = builtin(name);
      for (const auto& a : {terminal(q), chain_category(q, 2), discrete(q, 3)}) {
        auto p = presheaf_downarrow(a);
        o.require(p.checks, std::string(name) + " " + a.label());
      }
    }
    return o;
  });

  criterion(6, "products", [] {
    Outcome o;
    auto b = builtin("boolean2");
    auto chain = certify_complete(chain_category(b, 2));
    o.require(product_downarrow(b, {chain, chain}).checks, "2-chain squared");
    auto q = builtin("lukasiewicz:3");
    auto omega = certify_complete(canonical_omega(q));
    o.require(product_downarrow(q, {omega, omega}).checks, "Omega squared");
    return o;
  });

  criterion(7, "subalgebra/closure and quotient/kernel bijections", [] {
    Outcome o;
    for (auto name : {"boolean2", "lukasiewicz:3"}) {
      auto l = certify_complete(canonical_omega(builtin(name)));
      auto c = closure_bijection_check(l);
      auto k = kernel_bijection_check(l);
      o.require(c.checks, name);
      o.require(k.checks, name);
      o.require(c.left_count == c.right_count && k.left_count == k.right_count, std::string(name) + " counts");
    }
    return o;
  });

  criterion(8, "decomposition through the power of Omega", [] {
    Outcome o;
    auto b = builtin("boolean2");
    std::vector<CompleteOmegaLattice> ls{certify_complete(canonical_omega(b)),
                                         certify_complete(canonical_omega(builtin("lukasiewicz:3"))),
                                         certify_complete(chain_category(b, 2))};
    for (const auto& l : ls) {
      auto rb = raney_buchi(l);
      o.require(rb.checks, l.cat().label());
      o.require(compose(rb.sup, rb.down) == identity_map(l.size()), l.cat().label() + " sup . down");
    }
    return o;
  });

  criterion(9, "kernel on functors", [] {
    Outcome o;
    auto b = builtin("boolean2");
    for (const auto& l : {certify_complete(chain_category(b, 2)), certify_complete(canonical_omega(b))}) {
      auto k = functor_kernel(l, l);
      o.require(k.checks, l.cat().label());
      o.require(k.fixed == k.cocontinuous, l.cat().label() + " fixed points");
    }
    return o;
  });

  criterion(10, "duality battery", [] {
    Outcome o;
    for (auto name : {"lukasiewicz:3", "boolean2", "goedel:3", "goedel:4"}) {
      auto q = builtin(name);
      auto rep = duality_check(q, default_corpus(q));
      o.require(rep.checks, name);
      const bool girard = classify(*q).girard;
      o.require(rep.girard == girard && rep.heyting_op == girard, std::string(name) + " flags");
      if (girard) {
        for (const auto& [id, cd] : rep.corpus_dual_cd) o.require(cd, std::string(name) + " " + id);
      } else {
        o.require(rep.witness.has_value(), std::string(name) + " witness");
        if (rep.witness) o.require(q->imp(q->imp(*rep.witness, 0), 0) != *rep.witness, "witness value");
        auto canon = certify_complete(canonical_omega(q));
        o.require(!is_cd(dual_lattice(canon)).cd, std::string(name) + " dual is CD");
      }
    }
    return o;
  });

  criterion(11, "free completely distributive lattice", [] {
    Outcome o;
    auto b = builtin("boolean2");
    auto f = free_cd(b, {"x"});
    o.require(f.checks, "F(x) over boolean2");
    auto lat = underlying_lattice(f.lattice);
    o.require(f.lattice.size() == 3 && lat.is_chain(), "F(x) is not a 3-chain");
    o.require(f.lattice.cat().label().ends_with("^op"), "F(x) is not a dual");
    auto chain = certify_complete(chain_category(b, 2));
    for (Index v = 0; v < 2; ++v) {
      auto e = extend(f, chain, {v});
      o.require(e.checks, "into the 2-chain");
    }
    for (Index v = 0; v < 3; ++v) o.require(extend(f, f.lattice, {v}).checks, "into F(x)");
    auto q = builtin("lukasiewicz:3");
    auto fl = free_cd(q, {"x"});
    o.require(fl.checks, "F(x) over lukasiewicz3");
    auto omega = certify_complete(canonical_omega(q));
    for (Index v = 0; v < 3; ++v) o.require(extend(fl, omega, {v}).checks, "into canonical lukasiewicz3");
    return o;
  });

  criterion(12, "mining regression", [] {
    Outcome o;
    MineOptions opts;
    opts.chain_lo = 2;
    opts.chain_hi = 3;
    auto one = mine(opts);
    opts.shards = 4;
    auto four = mine(opts);
    o.require(one.failed() == 0, std::to_string(one.failed()) + " violations");
    o.require(one.json() == four.json(), "sharded output differs");
    if (o.ok) o.detail = std::to_string(one.passed()) + " checks";
    return o;
  });

  std::printf("%d of 12 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
