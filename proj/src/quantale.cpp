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


#include "oql/quantale.hpp"

#include <algorithm>
#include <charconv>

namespace oql {

namespace {

std::vector<std::string> names_of(const FiniteLattice& l, std::initializer_list<std::size_t> xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(l.name(x));
  return out;
}

}  // namespace

QuantaleDiagnosis diagnose_quantale(const QuantaleSpec& spec) {
  QuantaleDiagnosis d;
  const FiniteLattice& l = spec.lattice;
  const std::size_t n = l.size();
  auto fail = [&](ErrorKind kind, std::string check, std::string msg, std::vector<std::string> w) {
    d.checks.fail(check, join_names(w));
    if (!d.error) d.error = Error(kind, std::move(msg), std::move(w));
  };
  if (spec.tensor.size() != n * n) {
    fail(ErrorKind::InvalidArgument, "table.total", "tensor table is not total over the carrier", {});
    return d;
  }
  if (spec.unit >= n) {
    fail(ErrorKind::InvalidArgument, "table.unit", "unit outside the carrier", {});
    return d;
  }
  for (Elem v : spec.tensor)
    if (v >= n) {
      fail(ErrorKind::InvalidArgument, "table.values", "tensor value outside the carrier", {});
      return d;
    }
  auto t = [&](std::size_t a, std::size_t b) { return spec.tensor[a * n + b]; };
  auto le = [&](std::size_t a, std::size_t b) { return l.leq(static_cast<Elem>(a), static_cast<Elem>(b)); };
  auto jn = [&](std::size_t a, std::size_t b) { return l.join(static_cast<Elem>(a), static_cast<Elem>(b)); };
  const std::size_t unit = spec.unit;
  const std::size_t bot = l.bottom();

  // unit law
  {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      if (t(a, unit) != a || t(unit, a) != a) {
        fail(ErrorKind::UnitLawFails, "unit_law", "a*I != a", names_of(l, {a}));
        ok = false;
      }
    if (ok) d.checks.pass("unit_law");
  }
  // monotone in each argument
  {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if (le(a, b))
          for (std::size_t c = 0; c < n && ok; ++c)
            if (!le(t(a, c), t(b, c)) || !le(t(c, a), t(c, b))) {
              fail(ErrorKind::NotMonotone, "monotone", "a<=b but a*c !<= b*c", names_of(l, {a, b, c}));
              ok = false;
            }
    if (ok) d.checks.pass("monotone");
  }
  // distribution over the empty join and binary joins
  {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      if (t(a, bot) != bot || t(bot, a) != bot) {
        fail(ErrorKind::JoinDistributionFails, "join_distribution", "a*0 != 0", names_of(l, {a}));
        ok = false;
      }
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        for (std::size_t c = 0; c < n && ok; ++c)
          if (t(a, jn(b, c)) != jn(t(a, b), t(a, c)) || t(jn(b, c), a) != jn(t(b, a), t(c, a))) {
            fail(ErrorKind::JoinDistributionFails, "join_distribution", "a*(b v c) != a*b v a*c",
                 names_of(l, {a, b, c}));
            ok = false;
          }
    if (ok) d.checks.pass("join_distribution");
  }
  // associativity
  {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        for (std::size_t c = 0; c < n && ok; ++c)
          if (t(t(a, b), c) != t(a, t(b, c))) {
            fail(ErrorKind::NotAssociative, "associative", "(a*b)*c != a*(b*c)", names_of(l, {a, b, c}));
            ok = false;
          }
    if (ok) d.checks.pass("associative");
  }
  // commutativity
  {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = a + 1; b < n && ok; ++b)
        if (t(a, b) != t(b, a)) {
          d.commutative = false;
          fail(ErrorKind::NotCommutative, "commutative", "a*b != b*a", names_of(l, {a, b}));
          ok = false;
        }
    if (ok) d.checks.pass("commutative");
  }
  // residuation adjunction a*b <= c <=> b <= a->c with a->c the join of {g : a*g <= c}
  if (!d.error) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t c = 0; c < n && ok; ++c) {
        std::size_t r = bot;
        for (std::size_t g = 0; g < n; ++g)
          if (le(t(a, g), c)) r = jn(r, g);
        for (std::size_t b = 0; b < n && ok; ++b)
          if (le(t(a, b), c) != le(b, r)) {
            fail(ErrorKind::Internal, "residuation", "residuation adjunction fails", names_of(l, {a, b, c}));
            ok = false;
          }
      }
    if (ok) d.checks.pass("residuation");
  }
  return d;
}

QuantalePtr verify_quantale(const QuantaleSpec& spec) {
  QuantaleDiagnosis d = diagnose_quantale(spec);
  if (d.error) throw *d.error;
  auto q = std::make_shared<Quantale>();
  q->name_ = spec.name;
  q->lattice_ = spec.lattice;
  q->unit_ = spec.unit;
  q->tensor_ = spec.tensor;
  const std::size_t n = spec.lattice.size();
  q->residual_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) {
      Elem r = spec.lattice.bottom();
      for (std::size_t g = 0; g < n; ++g)
        if (spec.lattice.leq(spec.tensor[a * n + g], static_cast<Elem>(c)))
          r = spec.lattice.join(r, static_cast<Elem>(g));
      q->residual_[a * n + c] = r;
    }
  return q;
}

Elem Quantale::join_all(std::span<const Elem> xs) const {
  Elem r = bottom();
  for (Elem x : xs) r = join(r, x);
  return r;
}

Elem Quantale::meet_all(std::span<const Elem> xs) const {
  Elem r = top();
  for (Elem x : xs) r = meet(r, x);
  return r;
}

Elem Quantale::elem(std::string_view name) const {
  if (auto e = lattice_.find(name)) return *e;
  throw Error(ErrorKind::Parse, "unknown element of " + name_, {std::string(name)});
}

Elem residuate(const Quantale& q, Elem a, Elem b) { return q.imp(a, b); }

CheckList check_residuation_laws(const Quantale& q) {
  CheckList out;
  const std::size_t n = q.size();
  auto E = [](std::size_t x) { return static_cast<Elem>(x); };
  auto nm = [&](std::initializer_list<std::size_t> xs) {
    std::vector<std::string> v;
    for (auto x : xs) v.push_back(q.elem_name(E(x)));
    return join_names(v);
  };
  auto I = q.unit();
  auto bot = q.bottom();
  auto top = q.top();
  // Subsets of the carrier stand in for indexed families; for large carriers
  // only the empty, singleton, pair and full families are used.
  std::vector<std::vector<Elem>> families;
  if (n <= 10) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Elem> f;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) f.push_back(E(i));
      families.push_back(std::move(f));
    }
  } else {
    families.push_back({});
    std::vector<Elem> all;
    for (std::size_t i = 0; i < n; ++i) {
      all.push_back(E(i));
      for (std::size_t j = i; j < n; ++j) families.push_back({E(i), E(j)});
    }
    families.push_back(all);
  }
  auto family_name = [&](const std::vector<Elem>& f) {
    std::vector<std::string> v;
    for (Elem e : f) v.push_back(q.elem_name(e));
    return "{" + join_names(v) + "}";
  };

  auto run = [&](std::string name, auto&& body) {
    std::string witness;
    body(witness);
    out.record(std::move(name), witness.empty(), witness);
  };

  run("residuation.zero_absorbs", [&](std::string& w) {
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      if (q.tensor(bot, E(a)) != bot) w = nm({a});
  });
  run("residuation.residual_is_join", [&](std::string& w) {
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      for (std::size_t b = 0; b < n && w.empty(); ++b) {
        Elem r = bot;
        for (std::size_t g = 0; g < n; ++g)
          if (q.leq(q.tensor(E(a), E(g)), E(b))) r = q.join(r, E(g));
        if (r != q.imp(E(a), E(b))) w = nm({a, b});
      }
  });
  run("residuation.unit_and_zero_residual", [&](std::string& w) {
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      if (q.imp(I, E(a)) != E(a) || q.imp(bot, E(a)) != top) w = nm({a});
  });
  run("residuation.residual_composition", [&](std::string& w) {
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      for (std::size_t b = 0; b < n && w.empty(); ++b)
        for (std::size_t c = 0; c < n && w.empty(); ++c)
          if (!q.leq(q.tensor(q.imp(E(a), E(b)), q.imp(E(b), E(c))), q.imp(E(a), E(c)))) w = nm({a, b, c});
  });
  run("residuation.currying", [&](std::string& w) {
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      for (std::size_t b = 0; b < n && w.empty(); ++b)
        for (std::size_t c = 0; c < n && w.empty(); ++c) {
          Elem x = q.imp(E(a), q.imp(E(b), E(c)));
          if (x != q.imp(q.tensor(E(a), E(b)), E(c)) || x != q.imp(E(b), q.imp(E(a), E(c)))) w = nm({a, b, c});
        }
  });
  run("residuation.triple_residual", [&](std::string& w) {
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      for (std::size_t b = 0; b < n && w.empty(); ++b)
        if (q.imp(q.imp(q.imp(E(a), E(b)), E(b)), E(b)) != q.imp(E(a), E(b))) w = nm({a, b});
  });
  run("residuation.tensor_distributes_over_joins", [&](std::string& w) {
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      for (const auto& f : families) {
        std::vector<Elem> img;
        for (Elem b : f) img.push_back(q.tensor(E(a), b));
        if (q.tensor(E(a), q.join_all(f)) != q.join_all(img)) {
          w = nm({a}) + "," + family_name(f);
          break;
        }
      }
  });
  run("residuation.residual_turns_joins_into_meets", [&](std::string& w) {
    for (std::size_t b = 0; b < n && w.empty(); ++b)
      for (const auto& f : families) {
        std::vector<Elem> left, right;
        for (Elem a : f) {
          left.push_back(q.imp(a, E(b)));
          right.push_back(q.imp(E(b), a));
        }
        if (q.imp(q.join_all(f), E(b)) != q.meet_all(left) || q.imp(E(b), q.meet_all(f)) != q.meet_all(right)) {
          w = nm({b}) + "," + family_name(f);
          break;
        }
      }
  });
  run("residuation.meet_over_gamma_covariant", [&](std::string& w) {
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      for (std::size_t b = 0; b < n && w.empty(); ++b) {
        Elem m = top;
        for (std::size_t g = 0; g < n; ++g) m = q.meet(m, q.imp(q.imp(E(g), E(a)), q.imp(E(g), E(b))));
        if (m != q.imp(E(a), E(b))) w = nm({a, b});
      }
  });
  run("residuation.meet_over_gamma_contravariant", [&](std::string& w) {
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      for (std::size_t b = 0; b < n && w.empty(); ++b) {
        Elem m = top;
        for (std::size_t g = 0; g < n; ++g) m = q.meet(m, q.imp(q.imp(E(a), E(g)), q.imp(E(b), E(g))));
        if (m != q.imp(E(b), E(a))) w = nm({a, b});
      }
  });
  return out;
}

const std::vector<std::string>* QuantaleClass::witness(std::string_view flag) const {
  for (const auto& [name, w] : witnesses)
    if (name == flag) return &w;
  return nullptr;
}

QuantaleClass classify(const Quantale& q) {
  QuantaleClass c;
  const std::size_t n = q.size();
  auto E = [](std::size_t x) { return static_cast<Elem>(x); };
  auto names = [&](std::initializer_list<std::size_t> xs) {
    std::vector<std::string> v;
    for (auto x : xs) v.push_back(q.elem_name(E(x)));
    return v;
  };
  c.integral = q.unit() == q.top();
  if (!c.integral) c.witnesses.emplace_back("integral", names({q.unit()}));

  c.divisible = true;
  for (std::size_t a = 0; a < n && c.divisible; ++a)
    for (std::size_t b = 0; b < n && c.divisible; ++b)
      if (q.tensor(E(a), q.imp(E(a), E(b))) != q.meet(E(a), E(b))) {
        c.divisible = false;
        c.witnesses.emplace_back("divisible", names({a, b}));
      }
  c.prelinear = true;
  for (std::size_t a = 0; a < n && c.prelinear; ++a)
    for (std::size_t b = 0; b < n && c.prelinear; ++b)
      if (q.join(q.imp(E(a), E(b)), q.imp(E(b), E(a))) != q.top()) {
        c.prelinear = false;
        c.witnesses.emplace_back("prelinear", names({a, b}));
      }
  c.girard = true;
  for (std::size_t a = 0; a < n && c.girard; ++a)
    if (q.imp(q.imp(E(a), q.bottom()), q.bottom()) != E(a)) {
      c.girard = false;
      c.witnesses.emplace_back("girard", names({a}));
    }
  c.bl = c.integral && c.divisible && c.prelinear;
  if (!c.bl) {
    const char* why = !c.integral ? "integral" : (!c.divisible ? "divisible" : "prelinear");
    c.witnesses.emplace_back("bl", std::vector<std::string>{why});
  }
  c.mv = c.bl && c.girard;
  if (!c.mv) c.witnesses.emplace_back("mv", std::vector<std::string>{!c.bl ? "bl" : "girard"});
  return c;
}

namespace {

QuantalePtr chain_quantale(std::string name, std::size_t n, Elem unit, auto&& op) {
  QuantaleSpec spec;
  spec.name = std::move(name);
  spec.lattice = FiniteLattice::chain(n);
  spec.unit = unit;
  spec.tensor.resize(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) spec.tensor[a * n + b] = static_cast<Elem>(op(a, b));
  return verify_quantale(spec);
}

}  // namespace

QuantalePtr builtin_boolean() {
  return chain_quantale("boolean2", 2, 1, [](std::size_t a, std::size_t b) { return std::min(a, b); });
}

QuantalePtr builtin_lukasiewicz(std::size_t n) {
  if (n < 2 || n > 255) throw Error(ErrorKind::BadSize, "lukasiewicz chain needs 2 <= n <= 255", {std::to_string(n)});
  return chain_quantale("lukasiewicz" + std::to_string(n), n, static_cast<Elem>(n - 1),
                        [n](std::size_t a, std::size_t b) { return a + b >= n - 1 ? a + b - (n - 1) : 0; });
}

QuantalePtr builtin_goedel(std::size_t n) {
  if (n < 2 || n > 255) throw Error(ErrorKind::BadSize, "goedel chain needs 2 <= n <= 255", {std::to_string(n)});
  return chain_quantale("goedel" + std::to_string(n), n, static_cast<Elem>(n - 1),
                        [](std::size_t a, std::size_t b) { return std::min(a, b); });
}

QuantalePtr builtin_nonintegral3() {
  // 0 < u < 1 with unit u and 1*1 = 1
  return chain_quantale("nonintegral3", 3, 1, [](std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) return std::size_t{0};
    if (a == 1) return b;
    if (b == 1) return a;
    return std::size_t{2};
  });
}

QuantalePtr builtin(std::string_view name) {
  std::string_view base = name;
  std::optional<std::size_t> size;
  if (auto colon = name.find(':'); colon != std::string_view::npos) {
    base = name.substr(0, colon);
    auto digits = name.substr(colon + 1);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || p != digits.data() + digits.size())
      throw Error(ErrorKind::InvalidArgument, "bad size in builtin name", {std::string(name)});
    size = v;
  } else {
    // trailing digits: "boolean2", "goedel3"
    std::size_t i = name.size();
    while (i > 0 && name[i - 1] >= '0' && name[i - 1] <= '9') --i;
    if (i < name.size()) {
      base = name.substr(0, i);
      std::size_t v = 0;
      std::from_chars(name.data() + i, name.data() + name.size(), v);
      size = v;
    }
  }
  if (base == "boolean") {
    if (size && *size != 2) throw Error(ErrorKind::BadSize, "boolean algebra has 2 elements", {std::string(name)});
    return builtin_boolean();
  }
  if (base == "lukasiewicz" || base == "luk" || base == "L") return builtin_lukasiewicz(size.value_or(3));
  if (base == "goedel" || base == "godel" || base == "G") return builtin_goedel(size.value_or(3));
  if (base == "nonintegral") {
    if (size && *size != 3) throw Error(ErrorKind::BadSize, "nonintegral builtin has 3 elements", {std::string(name)});
    return builtin_nonintegral3();
  }
  throw Error(ErrorKind::InvalidArgument, "unknown builtin quantale", {std::string(name)});
}

std::vector<QuantalePtr> enumerate_quantales(const FiniteLattice& lattice, const EnumerateOptions& options,
                                             std::string_view prefix) {
  const std::size_t n = lattice.size();
  if (n > options.size_bound)
    throw Error(ErrorKind::SizeBound, "lattice exceeds the enumeration size bound",
                {std::to_string(n), std::to_string(options.size_bound)});
  kernels::TensorSearch search;
  search.size = n;
  search.leq = lattice.leq_table();
  search.bottom = lattice.bottom();
  search.accept = [&lattice](const kernels::TensorTable& t) {
    QuantaleSpec spec{"", lattice, t.unit, t.table};
    return diagnose_quantale(spec).ok();
  };
  auto tables = kernels::enumerate_tensors(search, options.policy, options.budget, options.shard, options.shards);
  std::vector<QuantalePtr> out;
  for (const auto& t : tables) {
    std::string name = std::string(prefix) + "/I=" + lattice.name(t.unit) + "/";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (!first) name += ",";
        name += lattice.name(t.table[i * n + j]);
        first = false;
      }
    out.push_back(verify_quantale({name, lattice, t.unit, t.table}));
  }
  return out;
}

}  // namespace oql
