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


#include "oql/complete.hpp"

#include <map>

namespace oql {

namespace {

std::string elem_pair(const Quantale& q, Elem alpha, const OmegaCategory& a, Index x) {
  return q.elem_name(alpha) + "," + a.object(x);
}

// Least element of `cands` in the underlying order, if one exists.
std::optional<Index> least_of(const OmegaCategory& a, const std::vector<Index>& cands) {
  if (cands.empty()) return std::nullopt;
  Index best = cands.front();
  for (Index c : cands)
    if (a.leq(c, best)) best = c;
  for (Index c : cands)
    if (!a.leq(best, c)) return std::nullopt;
  return best;
}

std::optional<Index> greatest_of(const OmegaCategory& a, const std::vector<Index>& cands) {
  if (cands.empty()) return std::nullopt;
  Index best = cands.front();
  for (Index c : cands)
    if (a.leq(best, c)) best = c;
  for (Index c : cands)
    if (!a.leq(c, best)) return std::nullopt;
  return best;
}

}  // namespace

Index CompleteOmegaLattice::sup(std::span<const Elem> phi) const {
  Index s = bottom_;
  for (Index x = 0; x < size(); ++x) s = join(s, tensor(phi[x], x));
  return s;
}

Index CompleteOmegaLattice::inf(std::span<const Elem> mu) const {
  Index s = top_;
  for (Index x = 0; x < size(); ++x) s = meet(s, cotensor(mu[x], x));
  return s;
}

Index CompleteOmegaLattice::join_all(std::span<const Index> xs) const {
  Index s = bottom_;
  for (Index x : xs) s = join(s, x);
  return s;
}

Index CompleteOmegaLattice::meet_all(std::span<const Index> xs) const {
  Index s = top_;
  for (Index x : xs) s = meet(s, x);
  return s;
}

CompleteOmegaLattice certify_complete(const OmegaCategory& a, const Budget& budget) {
  const Quantale& q = a.omega();
  const Index n = static_cast<Index>(a.size());
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y)
      if (isomorphic_objects(a, x, y))
        throw Error(ErrorKind::NotAntisymmetric, "distinct isomorphic objects", {a.object(x), a.object(y)});
  if (n == 0) throw Error(ErrorKind::UnderlyingNotComplete, "empty category has no bottom");

  CompleteOmegaLattice l;
  l.cat_ = a;
  l.route_ = "tensor-cotensor";
  std::vector<Index> all(n);
  for (Index x = 0; x < n; ++x) all[x] = x;
  auto bot = least_of(a, all);
  auto top = greatest_of(a, all);
  if (!bot) throw Error(ErrorKind::UnderlyingNotComplete, "no bottom element", {"bottom"});
  if (!top) throw Error(ErrorKind::UnderlyingNotComplete, "no top element", {"top"});
  l.bottom_ = *bot;
  l.top_ = *top;
  l.join_.assign(std::size_t{n} * n, 0);
  l.meet_.assign(std::size_t{n} * n, 0);
  std::vector<Index> cands;
  for (Index x = 0; x < n; ++x)
    for (Index y = x; y < n; ++y) {
      cands.clear();
      for (Index z = 0; z < n; ++z)
        if (a.leq(x, z) && a.leq(y, z)) cands.push_back(z);
      auto j = least_of(a, cands);
      if (!j) throw Error(ErrorKind::UnderlyingNotComplete, "no least upper bound", {a.object(x), a.object(y)});
      cands.clear();
      for (Index z = 0; z < n; ++z)
        if (a.leq(z, x) && a.leq(z, y)) cands.push_back(z);
      auto m = greatest_of(a, cands);
      if (!m) throw Error(ErrorKind::UnderlyingNotComplete, "no greatest lower bound", {a.object(x), a.object(y)});
      l.join_[x * n + y] = l.join_[y * n + x] = *j;
      l.meet_[x * n + y] = l.meet_[y * n + x] = *m;
    }

  // alpha (x) x <= z iff alpha <= A(x,z), so the only candidate is the meet of
  // those z; it is then checked against the defining equation.
  const std::size_t w = q.size();
  l.tensor_.assign(w * n, 0);
  l.cotensor_.assign(w * n, 0);
  for (std::size_t al = 0; al < w; ++al) {
    const Elem alpha = static_cast<Elem>(al);
    for (Index x = 0; x < n; ++x) {
      Index t = l.top_, c = l.bottom_;
      for (Index z = 0; z < n; ++z) {
        if (q.leq(alpha, a.hom(x, z))) t = l.meet(t, z);
        if (q.leq(alpha, a.hom(z, x))) c = l.join(c, z);
      }
      for (Index z = 0; z < n; ++z)
        if (a.hom(t, z) != q.imp(alpha, a.hom(x, z)))
          throw Error(ErrorKind::NotTensored, "no tensor", {q.elem_name(alpha), a.object(x)});
      for (Index z = 0; z < n; ++z)
        if (a.hom(z, c) != q.imp(alpha, a.hom(z, x)))
          throw Error(ErrorKind::NotCotensored, "no cotensor", {q.elem_name(alpha), a.object(x)});
      l.tensor_[al * n + x] = t;
      l.cotensor_[al * n + x] = c;
    }
  }

  CheckList& cert = l.certificate_;
  std::string w_adj, w_unit, w_assoc, w_cunit, w_cassoc, w_scalar, w_object, w_cscalar, w_cobject;
  for (std::size_t al = 0; al < w; ++al) {
    const Elem alpha = static_cast<Elem>(al);
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n && w_adj.empty(); ++y)
        if (a.hom(l.tensor(alpha, x), y) != q.imp(alpha, a.hom(x, y)) ||
            a.hom(x, l.cotensor(alpha, y)) != q.imp(alpha, a.hom(x, y)))
          w_adj = elem_pair(q, alpha, a, x) + "," + a.object(y);
      for (std::size_t be = 0; be < w; ++be) {
        const Elem beta = static_cast<Elem>(be);
        if (w_assoc.empty() && l.tensor(q.tensor(alpha, beta), x) != l.tensor(alpha, l.tensor(beta, x)))
          w_assoc = q.elem_name(alpha) + "," + q.elem_name(beta) + "," + a.object(x);
        if (w_cassoc.empty() && l.cotensor(q.tensor(alpha, beta), x) != l.cotensor(alpha, l.cotensor(beta, x)))
          w_cassoc = q.elem_name(alpha) + "," + q.elem_name(beta) + "," + a.object(x);
        if (w_scalar.empty() && l.tensor(q.join(alpha, beta), x) != l.join(l.tensor(alpha, x), l.tensor(beta, x)))
          w_scalar = q.elem_name(alpha) + "," + q.elem_name(beta) + "," + a.object(x);
        if (w_cscalar.empty() &&
            l.cotensor(q.join(alpha, beta), x) != l.meet(l.cotensor(alpha, x), l.cotensor(beta, x)))
          w_cscalar = q.elem_name(alpha) + "," + q.elem_name(beta) + "," + a.object(x);
      }
      for (Index y = 0; y < n; ++y) {
        if (w_object.empty() && l.tensor(alpha, l.join(x, y)) != l.join(l.tensor(alpha, x), l.tensor(alpha, y)))
          w_object = elem_pair(q, alpha, a, x) + "," + a.object(y);
        if (w_cobject.empty() &&
            l.cotensor(alpha, l.meet(x, y)) != l.meet(l.cotensor(alpha, x), l.cotensor(alpha, y)))
          w_cobject = elem_pair(q, alpha, a, x) + "," + a.object(y);
      }
    }
    if (w_object.empty() && l.tensor(alpha, l.bottom_) != l.bottom_) w_object = q.elem_name(alpha) + ",bottom";
    if (w_cobject.empty() && l.cotensor(alpha, l.top_) != l.top_) w_cobject = q.elem_name(alpha) + ",top";
  }
  for (Index x = 0; x < n; ++x) {
    if (w_unit.empty() && l.tensor(q.unit(), x) != x) w_unit = a.object(x);
    if (w_cunit.empty() && l.cotensor(q.unit(), x) != x) w_cunit = a.object(x);
    if (w_scalar.empty() && l.tensor(q.bottom(), x) != l.bottom_) w_scalar = "0," + a.object(x);
    if (w_cscalar.empty() && l.cotensor(q.bottom(), x) != l.top_) w_cscalar = "0," + a.object(x);
  }
  cert.record("tensor_cotensor_adjunction", w_adj.empty(), w_adj);
  cert.record("tensor_unit", w_unit.empty(), w_unit);
  cert.record("tensor_associative", w_assoc.empty(), w_assoc);
  cert.record("cotensor_unit", w_cunit.empty(), w_cunit);
  cert.record("cotensor_associative", w_cassoc.empty(), w_cassoc);
  cert.record("tensor_preserves_scalar_joins", w_scalar.empty(), w_scalar);
  cert.record("tensor_preserves_object_joins", w_object.empty(), w_object);
  cert.record("cotensor_scalar_joins_to_meets", w_cscalar.empty(), w_cscalar);
  cert.record("cotensor_preserves_object_meets", w_cobject.empty(), w_cobject);

  std::string w_hj, w_hm;
  for (Index z = 0; z < n; ++z) {
    if (w_hj.empty() && a.hom(l.bottom_, z) != q.top()) w_hj = "bottom," + a.object(z);
    if (w_hm.empty() && a.hom(z, l.top_) != q.top()) w_hm = a.object(z) + ",top";
  }
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index z = 0; z < n; ++z) {
        if (w_hj.empty() && a.hom(l.join(x, y), z) != q.meet(a.hom(x, z), a.hom(y, z)))
          w_hj = a.object(x) + "," + a.object(y) + "," + a.object(z);
        if (w_hm.empty() && a.hom(z, l.meet(x, y)) != q.meet(a.hom(z, x), a.hom(z, y)))
          w_hm = a.object(x) + "," + a.object(y) + "," + a.object(z);
      }
  cert.record("hom_turns_joins_into_meets", w_hj.empty(), w_hj);
  cert.record("hom_preserves_meets", w_hm.empty(), w_hm);

  try {
    auto lower = enumerate_presheaves(a, Variance::Lower, budget);
    std::string ws;
    for (std::size_t k = 0; k < lower.size() && ws.empty(); ++k) {
      const Index s = l.sup(lower[k]);
      for (Index x = 0; x < n && ws.empty(); ++x)
        if (a.hom(s, x) != presheaf_hom(q, lower[k], yoneda(a, x).values))
          ws = presheaf_name(q, lower[k]) + "," + a.object(x);
    }
    cert.record("sup_left_adjoint_to_yoneda", ws.empty(), ws);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeBound) throw;
    cert.skip("sup_left_adjoint_to_yoneda", "budget");
  }
  return l;
}

bool sup_characterized(const CompleteOmegaLattice& l, std::span<const Elem> phi) {
  const Quantale& q = l.omega();
  const Index s = l.sup(phi);
  for (Index x = 0; x < l.size(); ++x) {
    Elem v = q.top();
    for (Index z = 0; z < l.size(); ++z) v = q.meet(v, q.imp(phi[z], l.hom(z, x)));
    if (l.hom(s, x) != v) return false;
  }
  return true;
}

bool inf_characterized(const CompleteOmegaLattice& l, std::span<const Elem> mu) {
  const Quantale& q = l.omega();
  const Index s = l.inf(mu);
  for (Index x = 0; x < l.size(); ++x) {
    Elem v = q.top();
    for (Index z = 0; z < l.size(); ++z) v = q.meet(v, q.imp(mu[z], l.hom(x, z)));
    if (l.hom(x, s) != v) return false;
  }
  return true;
}

CheckList sup_coherence_check(const CompleteOmegaLattice& l, const Budget& budget) {
  CheckList out;
  const Quantale& q = l.omega();
  const Index n = static_cast<Index>(l.size());
  PresheafFamily funcs;
  try {
    funcs = all_functions(l.cat(), budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeBound) throw;
    out.skip("sup_coherence", "budget");
    out.skip("inf_coherence", "budget");
    return out;
  }
  std::map<std::vector<Elem>, Index> rows, cols;
  for (Index s = 0; s < n; ++s) {
    std::vector<Elem> r(n), c(n);
    for (Index x = 0; x < n; ++x) {
      r[x] = l.hom(s, x);
      c[x] = l.hom(x, s);
    }
    rows.emplace(std::move(r), s);
    cols.emplace(std::move(c), s);
  }
  std::string ws, wi, wcs, wci;
  std::vector<Elem> v(n);
  for (std::size_t k = 0; k < funcs.size(); ++k) {
    auto phi = funcs[k];
    if (ws.empty()) {
      for (Index x = 0; x < n; ++x) {
        v[x] = q.top();
        for (Index z = 0; z < n; ++z) v[x] = q.meet(v[x], q.imp(phi[z], l.hom(z, x)));
      }
      auto it = rows.find(v);
      if (it == rows.end() || it->second != l.sup(phi)) ws = presheaf_name(q, phi);
    }
    if (wi.empty()) {
      for (Index x = 0; x < n; ++x) {
        v[x] = q.top();
        for (Index z = 0; z < n; ++z) v[x] = q.meet(v[x], q.imp(phi[z], l.hom(x, z)));
      }
      auto it = cols.find(v);
      if (it == cols.end() || it->second != l.inf(phi)) wi = presheaf_name(q, phi);
    }
    if (wcs.empty() && l.sup(down_close(l.cat(), phi)) != l.sup(phi)) wcs = presheaf_name(q, phi);
    if (wci.empty() && l.inf(up_close(l.cat(), phi)) != l.inf(phi)) wci = presheaf_name(q, phi);
  }
  out.record("sup_coherence", ws.empty(), ws);
  out.record("inf_coherence", wi.empty(), wi);
  out.record("sup_closure_invariant", wcs.empty(), wcs);
  out.record("inf_closure_invariant", wci.empty(), wci);
  out.pass("functions", std::to_string(funcs.size()));
  return out;
}

CheckList check_module(const OmegaModuleSpec& m) {
  CheckList out;
  const Quantale& q = *m.omega;
  const FiniteLattice& lat = m.lattice;
  const std::size_t n = lat.size();
  if (m.action.size() != q.size() * n) {
    out.fail("action_total", std::to_string(m.action.size()));
    return out;
  }
  for (Elem v : m.action)
    if (v >= n) {
      out.fail("action_total", std::to_string(v));
      return out;
    }
  auto act = [&](Elem alpha, Elem x) { return m.action[alpha * n + x]; };
  std::string wu, wa, ws, wo;
  for (std::size_t x = 0; x < n; ++x) {
    const Elem ex = static_cast<Elem>(x);
    if (wu.empty() && act(q.unit(), ex) != ex) wu = lat.name(x);
    if (ws.empty() && act(q.bottom(), ex) != lat.bottom()) ws = "0," + lat.name(x);
    for (std::size_t al = 0; al < q.size(); ++al) {
      const Elem alpha = static_cast<Elem>(al);
      for (std::size_t be = 0; be < q.size(); ++be) {
        const Elem beta = static_cast<Elem>(be);
        const std::string tag = q.elem_name(alpha) + "," + q.elem_name(beta) + "," + lat.name(x);
        if (wa.empty() && act(q.tensor(alpha, beta), ex) != act(alpha, act(beta, ex))) wa = tag;
        if (ws.empty() && act(q.join(alpha, beta), ex) != lat.join(act(alpha, ex), act(beta, ex))) ws = tag;
      }
      if (wo.empty() && x == 0 && act(alpha, lat.bottom()) != lat.bottom()) wo = q.elem_name(alpha) + ",bottom";
      for (std::size_t y = 0; y < n && wo.empty(); ++y) {
        const Elem ey = static_cast<Elem>(y);
        if (act(alpha, lat.join(ex, ey)) != lat.join(act(alpha, ex), act(alpha, ey)))
          wo = q.elem_name(alpha) + "," + lat.name(x) + "," + lat.name(y);
      }
    }
  }
  out.record("unit", wu.empty(), wu);
  out.record("associative", wa.empty(), wa);
  out.record("scalar_joins", ws.empty(), ws);
  out.record("object_joins", wo.empty(), wo);
  return out;
}

CompleteOmegaLattice module_to_enriched(const OmegaModuleSpec& m, const Budget& budget) {
  auto laws = check_module(m);
  for (const auto& c : laws.items())
    if (!c.ok && !c.skipped) throw Error(ErrorKind::ModuleLawFails, c.name, {c.witness});
  const Quantale& q = *m.omega;
  const FiniteLattice& lat = m.lattice;
  const std::size_t n = lat.size();
  std::vector<Elem> hom(n * n, q.bottom());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t al = 0; al < q.size(); ++al)
        if (lat.leq(m.action[al * n + x], static_cast<Elem>(y)))
          hom[x * n + y] = q.join(hom[x * n + y], static_cast<Elem>(al));
  auto l = certify_complete(OmegaCategory(m.omega, lat.names(), std::move(hom), "module"), budget);
  for (std::size_t al = 0; al < q.size(); ++al)
    for (Index x = 0; x < n; ++x)
      if (l.tensor(static_cast<Elem>(al), x) != m.action[al * n + x])
        throw Error(ErrorKind::Internal, "tensor of the enriched structure differs from the action",
                    {q.elem_name(static_cast<Elem>(al)), lat.name(x)});
  return l;
}

OmegaModuleSpec enriched_to_module(const CompleteOmegaLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::uint8_t> leq(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) leq[x * n + y] = l.leq(x, y);
  OmegaModuleSpec m{l.quantale(), FiniteLattice(l.cat().objects(), std::move(leq)), {}};
  m.action.resize(l.omega().size() * n);
  for (std::size_t al = 0; al < l.omega().size(); ++al)
    for (Index x = 0; x < n; ++x) m.action[al * n + x] = static_cast<Elem>(l.tensor(static_cast<Elem>(al), x));
  return m;
}

FixedPoints tarski_fix(const CompleteOmegaLattice& l, const ObjectMap& f, const Budget& budget) {
  if (auto bad = functor_violation(l.cat(), l.cat(), f))
    throw Error(ErrorKind::NotFunctor, "endomap is not a functor",
                {l.cat().object(bad->first), l.cat().object(bad->second)});
  const Quantale& q = l.omega();
  FixedPoints out;
  std::vector<bool> in_m(l.size());
  for (Index x = 0; x < l.size(); ++x) {
    if (l.leq(x, f[x])) {
      out.prefixed.push_back(x);
      in_m[x] = true;
    }
    if (f[x] == x) out.fixed.push_back(x);
  }
  std::string wj, wt;
  if (!in_m[l.bottom()]) wj = "bottom";
  for (Index x : out.prefixed) {
    for (Index y : out.prefixed)
      if (wj.empty() && !in_m[l.join(x, y)]) wj = l.cat().object(x) + "," + l.cat().object(y);
    for (std::size_t al = 0; al < q.size(); ++al)
      if (wt.empty() && !in_m[l.tensor(static_cast<Elem>(al), x)])
        wt = q.elem_name(static_cast<Elem>(al)) + "," + l.cat().object(x);
  }
  out.checks.record("prefixed_closed_under_joins", wj.empty(), wj);
  out.checks.record("prefixed_closed_under_tensors", wt.empty(), wt);
  const Index s = l.join_all(out.prefixed);
  out.checks.record("join_of_prefixed_is_fixed", f[s] == s, l.cat().object(s));
  bool greatest = true;
  for (Index x : out.fixed) greatest = greatest && l.leq(x, s);
  out.checks.record("join_of_prefixed_is_greatest_fixed", greatest, l.cat().object(s));
  out.lattice = certify_complete(subcategory(l.cat(), out.fixed), budget);
  return out;
}

FunctorLattice functor_lattice(const OmegaCategory& a, const CompleteOmegaLattice& b, const Budget& budget) {
  auto fc = functor_category(a, b.cat(), budget);
  FunctorLattice out{std::move(fc.maps), certify_complete(fc.category, budget), {}};
  const Quantale& q = b.omega();
  std::map<ObjectMap, Index> index;
  for (std::size_t i = 0; i < out.maps.size(); ++i) index.emplace(out.maps[i], static_cast<Index>(i));
  const auto& cat = out.lattice.cat();
  std::string wj, wm, wt, wc;
  for (std::size_t i = 0; i < out.maps.size(); ++i) {
    for (std::size_t j = 0; j < out.maps.size(); ++j) {
      ObjectMap jn(a.size()), mt(a.size());
      for (Index x = 0; x < a.size(); ++x) {
        jn[x] = b.join(out.maps[i][x], out.maps[j][x]);
        mt[x] = b.meet(out.maps[i][x], out.maps[j][x]);
      }
      auto it = index.find(jn);
      if (wj.empty() && (it == index.end() || it->second != out.lattice.join(i, j)))
        wj = cat.object(i) + "," + cat.object(j);
      it = index.find(mt);
      if (wm.empty() && (it == index.end() || it->second != out.lattice.meet(i, j)))
        wm = cat.object(i) + "," + cat.object(j);
    }
    for (std::size_t al = 0; al < q.size(); ++al) {
      const Elem alpha = static_cast<Elem>(al);
      ObjectMap t(a.size()), c(a.size());
      for (Index x = 0; x < a.size(); ++x) {
        t[x] = b.tensor(alpha, out.maps[i][x]);
        c[x] = b.cotensor(alpha, out.maps[i][x]);
      }
      auto it = index.find(t);
      if (wt.empty() && (it == index.end() || it->second != out.lattice.tensor(alpha, i)))
        wt = q.elem_name(alpha) + "," + cat.object(i);
      it = index.find(c);
      if (wc.empty() && (it == index.end() || it->second != out.lattice.cotensor(alpha, i)))
        wc = q.elem_name(alpha) + "," + cat.object(i);
    }
  }
  out.checks.record("pointwise_join", wj.empty(), wj);
  out.checks.record("pointwise_meet", wm.empty(), wm);
  out.checks.record("pointwise_tensor", wt.empty(), wt);
  out.checks.record("pointwise_cotensor", wc.empty(), wc);
  return out;
}

ProductLattice product_lattice(QuantalePtr omega, const std::vector<CompleteOmegaLattice>& factors,
                               const Budget& budget) {
  std::vector<OmegaCategory> cats;
  std::uint64_t total = 1;
  for (const auto& f : factors) {
    cats.push_back(f.cat());
    total = total > budget.limit ? total : total * f.size();
  }
  if (total > budget.limit) throw_size_bound("product carrier", total, budget);
  ProductLattice out;
  out.lattice = certify_complete(product(omega, cats), budget);
  // Mixed radix with the last factor varying fastest, matching product().
  std::vector<Index> cur(factors.size(), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    out.tuples.push_back(cur);
    for (std::size_t i = factors.size(); i-- > 0;) {
      if (++cur[i] < factors[i].size()) break;
      cur[i] = 0;
    }
  }
  auto encode = [&](const std::vector<Index>& t) {
    Index k = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) k = k * static_cast<Index>(factors[i].size()) + t[i];
    return k;
  };
  const Quantale& q = *omega;
  std::string wt;
  for (std::size_t al = 0; al < q.size(); ++al)
    for (Index k = 0; k < out.tuples.size() && wt.empty(); ++k) {
      std::vector<Index> t(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i) t[i] = factors[i].tensor(static_cast<Elem>(al), out.tuples[k][i]);
      if (encode(t) != out.lattice.tensor(static_cast<Elem>(al), k))
        wt = q.elem_name(static_cast<Elem>(al)) + "," + out.lattice.cat().object(k);
    }
  out.checks.record("componentwise_tensor", wt.empty(), wt);
  for (std::size_t j = 0; j < factors.size(); ++j) {
    ObjectMap p(out.tuples.size()), lo(factors[j].size()), hi(factors[j].size());
    for (Index k = 0; k < out.tuples.size(); ++k) p[k] = out.tuples[k][j];
    for (Index t = 0; t < factors[j].size(); ++t) {
      std::vector<Index> b(factors.size()), u(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i) {
        b[i] = i == j ? t : factors[i].bottom();
        u[i] = i == j ? t : factors[i].top();
      }
      lo[t] = encode(b);
      hi[t] = encode(u);
    }
    const std::string tag = "projection" + std::to_string(j);
    out.checks.append(check_adjunction(factors[j].cat(), out.lattice.cat(), {lo, p}), tag + ".pad_bottom_left_adjoint");
    out.checks.append(check_adjunction(out.lattice.cat(), factors[j].cat(), {p, hi}), tag + ".pad_top_right_adjoint");
    out.projections.push_back(std::move(p));
    out.pad_bottom.push_back(std::move(lo));
    out.pad_top.push_back(std::move(hi));
  }
  return out;
}

Equalizer equalizer(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const ObjectMap& f,
                    const ObjectMap& g, const Budget& budget) {
  Equalizer out;
  for (Index x = 0; x < l.size(); ++x)
    if (f.at(x) == g.at(x)) out.embedding.push_back(x);
  if (m.size() == 0) throw Error(ErrorKind::InvalidArgument, "empty codomain");
  out.lattice = certify_complete(subcategory(l.cat(), out.embedding), budget);
  const Quantale& q = l.omega();
  const auto& e = out.lattice;
  try {
    auto lower = enumerate_presheaves(e.cat(), Variance::Lower, budget);
    auto upper = enumerate_presheaves(e.cat(), Variance::Upper, budget);
    std::string ws, wi;
    for (std::size_t k = 0; k < lower.size() && ws.empty(); ++k)
      if (out.embedding[e.sup(lower[k])] != l.sup(image(l.cat(), out.embedding, lower[k])))
        ws = presheaf_name(q, lower[k]);
    for (std::size_t k = 0; k < upper.size() && wi.empty(); ++k)
      if (out.embedding[e.inf(upper[k])] != l.inf(image(l.cat(), out.embedding, upper[k])))
        wi = presheaf_name(q, upper[k]);
    out.checks.record("embedding_preserves_sup", ws.empty(), ws);
    out.checks.record("embedding_preserves_inf", wi.empty(), wi);
  } catch (const Error& err) {
    if (err.kind() != ErrorKind::SizeBound) throw;
    out.checks.skip("embedding_preserves_sup", "budget");
    out.checks.skip("embedding_preserves_inf", "budget");
  }
  return out;
}

bool has_left_adjoint(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const ObjectMap& f) {
  return !find_left_adjoints(m.cat(), l.cat(), f).empty();
}

bool has_right_adjoint(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const ObjectMap& f) {
  return !find_right_adjoints(l.cat(), m.cat(), f).empty();
}

CheckList is_complete_morphism(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const ObjectMap& f,
                               const Budget& budget) {
  CheckList out;
  auto bad = functor_violation(l.cat(), m.cat(), f);
  out.record("functor", !bad, bad ? l.cat().object(bad->first) + "," + l.cat().object(bad->second) : "");
  if (bad) return out;
  out.record("has_left_adjoint", !find_left_adjoints(m.cat(), l.cat(), f, budget).empty(), map_name(m.cat(), f));
  out.record("has_right_adjoint", !find_right_adjoints(l.cat(), m.cat(), f, budget).empty(), map_name(m.cat(), f));
  return out;
}

std::string sup_preservation_failure(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m,
                                     const ObjectMap& f, const PresheafFamily& lower) {
  for (std::size_t k = 0; k < lower.size(); ++k)
    if (f[l.sup(lower[k])] != m.sup(image(m.cat(), f, lower[k]))) return presheaf_name(l.omega(), lower[k]);
  return {};
}

std::string inf_preservation_failure(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m,
                                     const ObjectMap& f, const PresheafFamily& upper) {
  for (std::size_t k = 0; k < upper.size(); ++k)
    if (f[l.inf(upper[k])] != m.inf(image(m.cat(), f, upper[k]))) return presheaf_name(l.omega(), upper[k]);
  return {};
}

std::string join_tensor_failure(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m,
                                      const ObjectMap& f) {
  const Quantale& q = l.omega();
  if (f[l.bottom()] != m.bottom()) return "bottom";
  for (Index x = 0; x < l.size(); ++x) {
    for (Index y = 0; y < l.size(); ++y)
      if (f[l.join(x, y)] != m.join(f[x], f[y])) return "join:" + l.cat().object(x) + "," + l.cat().object(y);
    for (std::size_t al = 0; al < q.size(); ++al)
      if (f[l.tensor(static_cast<Elem>(al), x)] != m.tensor(static_cast<Elem>(al), f[x]))
        return "tensor:" + q.elem_name(static_cast<Elem>(al)) + "," + l.cat().object(x);
  }
  return {};
}

std::string meet_cotensor_failure(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m,
                                        const ObjectMap& f) {
  const Quantale& q = l.omega();
  if (f[l.top()] != m.top()) return "top";
  for (Index x = 0; x < l.size(); ++x) {
    for (Index y = 0; y < l.size(); ++y)
      if (f[l.meet(x, y)] != m.meet(f[x], f[y])) return "meet:" + l.cat().object(x) + "," + l.cat().object(y);
    for (std::size_t al = 0; al < q.size(); ++al)
      if (f[l.cotensor(static_cast<Elem>(al), x)] != m.cotensor(static_cast<Elem>(al), f[x]))
        return "cotensor:" + q.elem_name(static_cast<Elem>(al)) + "," + l.cat().object(x);
  }
  return {};
}

CheckList preservation_check(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const ObjectMap& f,
                             const Budget& budget) {
  CheckList out;
  if (auto bad = functor_violation(l.cat(), m.cat(), f)) {
    out.fail("functor", l.cat().object(bad->first) + "," + l.cat().object(bad->second));
    return out;
  }
  const bool right = !find_right_adjoints(l.cat(), m.cat(), f, budget).empty();
  const bool left = !find_left_adjoints(m.cat(), l.cat(), f, budget).empty();
  const std::string ot = join_tensor_failure(l, m, f);
  const std::string oc = meet_cotensor_failure(l, m, f);
  auto bit = [](bool b) { return b ? std::string("1") : std::string("0"); };
  try {
    auto lower = enumerate_presheaves(l.cat(), Variance::Lower, budget);
    auto upper = enumerate_presheaves(l.cat(), Variance::Upper, budget);
    const std::string ps = sup_preservation_failure(l, m, f, lower);
    const std::string pi = inf_preservation_failure(l, m, f, upper);
    out.record("sup_side.routes_agree", right == ps.empty() && right == ot.empty(),
               bit(right) + bit(ps.empty()) + bit(ot.empty()));
    out.record("inf_side.routes_agree", left == pi.empty() && left == oc.empty(),
               bit(left) + bit(pi.empty()) + bit(oc.empty()));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SizeBound) throw;
    out.record("sup_side.routes_agree", right == ot.empty(), bit(right) + "-" + bit(ot.empty()));
    out.record("inf_side.routes_agree", left == oc.empty(), bit(left) + "-" + bit(oc.empty()));
    out.skip("presheaf_preservation", "budget");
  }
  out.pass("preserves_sups", right ? "yes" : "no: " + ot);
  out.pass("preserves_infs", left ? "yes" : "no: " + oc);
  return out;
}

CheckList functor_criterion_check(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const Budget& budget) {
  CheckList out;
  const std::uint64_t total = saturating_pow(m.size(), l.size());
  if (total > budget.limit) {
    out.skip("functor_criterion", "budget");
    return out;
  }
  const Quantale& q = l.omega();
  ObjectMap f(l.size(), 0);
  std::string w;
  std::uint64_t functors = 0;
  for (std::uint64_t k = 0; k < total && w.empty(); ++k) {
    const bool functor = is_functor(l.cat(), m.cat(), f);
    bool order = true;
    for (Index x = 0; x < l.size() && order; ++x)
      for (Index y = 0; y < l.size() && order; ++y)
        if (l.leq(x, y) && !m.leq(f[x], f[y])) order = false;
    for (Index x = 0; x < l.size() && order; ++x)
      for (std::size_t al = 0; al < q.size() && order; ++al) {
        const Elem alpha = static_cast<Elem>(al);
        if (!m.leq(m.tensor(alpha, f[x]), f[l.tensor(alpha, x)])) order = false;
      }
    functors += functor;
    if (functor != order) w = map_name(m.cat(), f);
    for (std::size_t i = f.size(); i-- > 0;) {
      if (++f[i] < m.size()) break;
      f[i] = 0;
    }
  }
  out.record("functor_criterion.functor_iff_monotone_and_lax_tensor", w.empty(), w);
  out.pass("functor_criterion.maps", std::to_string(total) + " maps, " + std::to_string(functors) + " functors");
  return out;
}

}  // namespace oql
