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


#include "oql/cd.hpp"

#include <map>
#include <optional>

namespace oql {

std::vector<std::size_t> meet_irreducibles(const OmegaCategory& a, const PresheafFamily& lower) {
  const Quantale& q = a.omega();
  const FiniteLattice& lat = q.lattice();
  const std::size_t n = a.size();
  // Upper covers of each element of Omega.
  std::vector<std::vector<Elem>> covers(q.size());
  for (std::size_t b = 0; b < q.size(); ++b)
    for (std::size_t c = 0; c < q.size(); ++c) {
      if (b == c || !lat.leq(static_cast<Elem>(b), static_cast<Elem>(c))) continue;
      bool cover = true;
      for (std::size_t d = 0; d < q.size() && cover; ++d)
        if (d != b && d != c && lat.leq(static_cast<Elem>(b), static_cast<Elem>(d)) &&
            lat.leq(static_cast<Elem>(d), static_cast<Elem>(c)))
          cover = false;
      if (cover) covers[b].push_back(static_cast<Elem>(c));
    }
  auto below = [&](const std::vector<Elem>& u, const std::vector<Elem>& v) {
    for (std::size_t x = 0; x < n; ++x)
      if (!lat.leq(u[x], v[x])) return false;
    return true;
  };
  // Every strict upper bound of psi lies above some psi join (beta (x) y(x))
  // with beta covering psi(x); psi is irreducible iff these have a least one.
  std::vector<std::size_t> out;
  std::vector<std::vector<Elem>> cands;
  for (std::size_t k = 0; k < lower.size(); ++k) {
    auto psi = lower[k];
    cands.clear();
    for (Index x = 0; x < n; ++x)
      for (Elem beta : covers[psi[x]]) {
        std::vector<Elem> c(psi.begin(), psi.end());
        for (Index y = 0; y < n; ++y) c[y] = q.join(c[y], q.tensor(beta, a.hom(y, x)));
        cands.push_back(std::move(c));
      }
    if (cands.empty()) continue;
    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
      if (below(cands[i], cands[best])) best = i;
    bool least = true;
    for (std::size_t i = 0; i < cands.size() && least; ++i) least = below(cands[best], cands[i]);
    if (least) out.push_back(k);
  }
  return out;
}

CdVerdict is_cd(const CompleteOmegaLattice& l, const PresheafFamily& lower, MeetScan scan,
                kernels::ExecPolicy policy) {
  const Quantale& q = l.omega();
  const std::size_t n = l.size();
  const std::size_t count = lower.size();
  CdVerdict v;
  v.presheaves = count;
  std::vector<Index> sups(count);
  for (std::size_t k = 0; k < count; ++k) sups[k] = l.sup(lower[k]);

  auto meet_ok = [&](std::size_t i, std::size_t j) {
    Index s = l.bottom();
    for (Index x = 0; x < n; ++x) s = l.join(s, l.tensor(q.meet(lower[i][x], lower[j][x]), x));
    return s == l.meet(sups[i], sups[j]);
  };
  std::vector<std::size_t> partners;
  if (scan == MeetScan::Irreducibles) partners = meet_irreducibles(l.cat(), lower);
  auto row_ok = [&](std::size_t i) -> std::optional<std::size_t> {
    if (scan == MeetScan::AllPairs) {
      for (std::size_t j = i + 1; j < count; ++j)
        if (!meet_ok(i, j)) return j;
    } else {
      for (std::size_t j : partners)
        if (!meet_ok(i, j)) return j;
    }
    return std::nullopt;
  };
  const std::size_t bad = kernels::first_failure(count, [&](std::size_t i) { return !row_ok(i); }, policy);
  if (bad < count) {
    v.equation = "sup(phi meet psi) = sup phi meet sup psi";
    v.witness = presheaf_name(q, lower[bad]) + "," + presheaf_name(q, lower[*row_ok(bad)]);
    return v;
  }
  std::vector<Elem> top(n, q.top());
  if (l.sup(top) != l.top()) {
    v.equation = "sup(top) = top";
    v.witness = presheaf_name(q, top);
    return v;
  }
  std::vector<Elem> tmp(n);
  for (std::size_t al = 0; al < q.size(); ++al) {
    const Elem alpha = static_cast<Elem>(al);
    for (std::size_t k = 0; k < count; ++k) {
      for (Index x = 0; x < n; ++x) tmp[x] = q.imp(alpha, lower[k][x]);
      if (l.sup(tmp) != l.cotensor(alpha, sups[k])) {
        v.equation = "sup(alpha -> phi) = alpha >-> sup phi";
        v.witness = q.elem_name(alpha) + "," + presheaf_name(q, lower[k]);
        return v;
      }
    }
  }
  v.cd = true;
  return v;
}

CdVerdict is_cd(const CompleteOmegaLattice& l, const Budget& budget) {
  return is_cd(l, enumerate_presheaves(l.cat(), Variance::Lower, budget));
}

std::vector<std::vector<Elem>> omega_closed_form(const Quantale& q) {
  std::vector<std::vector<Elem>> out(q.size(), std::vector<Elem>(q.size()));
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t t = 0; t < q.size(); ++t)
      out[x][t] = q.tensor(static_cast<Elem>(x), q.imp(static_cast<Elem>(t), q.unit()));
  return out;
}

DownarrowOperator downarrow(const CompleteOmegaLattice& l, const Budget& budget) {
  return downarrow(l, enumerate_presheaves(l.cat(), Variance::Lower, budget));
}

DownarrowOperator downarrow(const CompleteOmegaLattice& l, PresheafFamily lower) {
  const auto verdict = is_cd(l, lower);
  if (!verdict.cd) throw Error(ErrorKind::NotCD, verdict.equation, {verdict.witness});
  const Quantale& q = l.omega();
  const auto& cat = l.cat();
  const std::size_t n = l.size();
  DownarrowOperator op;
  op.lower = std::move(lower);
  const auto& fam = op.lower;
  std::vector<Index> sups(fam.size());
  for (std::size_t k = 0; k < fam.size(); ++k) sups[k] = l.sup(fam[k]);
  op.table.assign(n, std::vector<Elem>(n, q.top()));
  for (Index a = 0; a < n; ++a)
    for (std::size_t k = 0; k < fam.size(); ++k)
      if (l.leq(a, sups[k]))
        for (Index x = 0; x < n; ++x) op.table[a][x] = q.meet(op.table[a][x], fam[k][x]);

  CheckList& cert = op.certificate;
  std::string w;
  for (Index a = 0; a < n && w.empty(); ++a)
    if (!fam.index_of(op.table[a])) w = cat.object(a);
  cert.record("lands_in_presheaves", w.empty(), w);
  const std::size_t bad = kernels::first_failure(n, [&](std::size_t a) {
    for (std::size_t k = 0; k < fam.size(); ++k)
      if (presheaf_hom(q, op.table[a], fam[k]) != l.hom(static_cast<Index>(a), sups[k])) return false;
    return true;
  });
  w.clear();
  if (bad < n) {
    for (std::size_t k = 0; k < fam.size() && w.empty(); ++k)
      if (presheaf_hom(q, op.table[bad], fam[k]) != l.hom(static_cast<Index>(bad), sups[k]))
        w = cat.object(static_cast<Index>(bad)) + "," + presheaf_name(q, fam[k]);
  }
  cert.record("adjunction", w.empty(), w);
  if (!w.empty())
    throw Error(ErrorKind::Internal, "criterion reports CD but the meet construction is not a left adjoint", {w});
  w.clear();
  for (Index a = 0; a < n && w.empty(); ++a)
    if (l.sup(op.table[a]) != a) w = cat.object(a);
  cert.record("sup_section", w.empty(), w);
  w.clear();
  for (Index a = 0; a < n && w.empty(); ++a)
    for (Index b = 0; b < n && w.empty(); ++b)
      if (!q.leq(l.hom(a, b), presheaf_hom(q, op.table[a], op.table[b]))) w = cat.object(a) + "," + cat.object(b);
  cert.record("functor", w.empty(), w);
  w.clear();
  for (Index a = 0; a < n && w.empty(); ++a)
    for (std::size_t k = 0; k < fam.size() && w.empty(); ++k) {
      bool below = true;
      for (Index x = 0; x < n; ++x) below = below && q.leq(op.table[a][x], fam[k][x]);
      if (below != l.leq(a, sups[k])) w = cat.object(a) + "," + presheaf_name(q, fam[k]);
    }
  cert.record("order_shadow", w.empty(), w);
  if (cat == canonical_omega(l.quantale())) {
    const bool same = omega_closed_form(q) == op.table;
    cert.record("closed_form", same, same ? "" : "table differs from x*(t->I)");
  }
  return op;
}

CheckList interpolate_check(const CompleteOmegaLattice& l, const DownarrowOperator& op) {
  CheckList out;
  const Quantale& q = l.omega();
  const std::size_t n = l.size();
  std::string w;
  for (Index x = 0; x < n && w.empty(); ++x)
    for (Index y = 0; y < n && w.empty(); ++y) {
      Elem v = q.bottom();
      for (Index z = 0; z < n; ++z) v = q.join(v, q.tensor(op.table[x][z], op.table[z][y]));
      if (v != op.table[x][y]) w = l.cat().object(x) + "," + l.cat().object(y);
    }
  out.record("interpolation", w.empty(), w);
  return out;
}

PresheafCd presheaf_downarrow(const OmegaCategory& a, const Budget& budget) {
  const Quantale& q = a.omega();
  PresheafCd out;
  out.base = enumerate_presheaves(a, Variance::Lower, budget);
  out.lattice = certify_complete(presheaf_category(a, out.base), budget);
  const auto& p = out.lattice.cat();
  for (Index x = 0; x < a.size(); ++x) out.yoneda.push_back(out.base.require(yoneda(a, x).values));
  auto outer = enumerate_presheaves(p, Variance::Lower, budget);
  std::string w;
  for (std::size_t k = 0; k < outer.size() && w.empty(); ++k) {
    auto restricted = pullback(out.yoneda, outer[k]);
    auto idx = out.base.index_of(restricted);
    if (!idx || *idx != out.lattice.sup(outer[k])) w = presheaf_name(q, outer[k]);
  }
  out.checks.record("sup_is_restriction_along_yoneda", w.empty(), w);
  out.checks.pass("outer_presheaves", std::to_string(outer.size()));
  for (std::size_t k = 0; k < out.base.size(); ++k)
    out.table.push_back(left_kan(a, p, out.yoneda, out.base[k], Variance::Lower));
  out.generic = downarrow(out.lattice, std::move(outer));
  out.checks.append(out.generic.certificate, "generic");
  w.clear();
  for (std::size_t k = 0; k < out.base.size() && w.empty(); ++k)
    if (out.table[k] != out.generic.table[k]) w = p.object(static_cast<Index>(k));
  out.checks.record("kan_equals_generic", w.empty(), w);
  return out;
}

ProductCd product_downarrow(QuantalePtr omega, const std::vector<CompleteOmegaLattice>& factors,
                            const Budget& budget) {
  const Quantale& q = *omega;
  ProductCd out;
  out.product = product_lattice(omega, factors, budget);
  std::vector<DownarrowOperator> parts;
  for (const auto& f : factors) parts.push_back(downarrow(f, budget));
  const auto& prod = out.product;
  const std::size_t n = prod.lattice.size();
  for (Index a = 0; a < n; ++a) {
    std::vector<Elem> v(n, q.bottom());
    for (std::size_t j = 0; j < factors.size(); ++j) {
      const Index aj = prod.tuples[a][j];
      for (Index t = 0; t < factors[j].size(); ++t) {
        const Index x = prod.pad_bottom[j][t];
        v[x] = q.join(v[x], parts[j].table[aj][t]);
      }
    }
    out.table.push_back(down_close(prod.lattice.cat(), v));
  }
  out.generic = downarrow(prod.lattice, budget);
  out.checks.append(out.generic.certificate, "generic");
  std::string w;
  for (Index a = 0; a < n && w.empty(); ++a)
    if (out.table[a] != out.generic.table[a]) w = prod.lattice.cat().object(a);
  out.checks.record("construction_equals_generic", w.empty(), w);
  return out;
}

std::optional<std::vector<std::string>> classical_cd_witness(const FiniteLattice& lat) {
  const std::size_t n = lat.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const Elem ea = static_cast<Elem>(a), eb = static_cast<Elem>(b), ec = static_cast<Elem>(c);
        if (lat.meet(ea, lat.join(eb, ec)) != lat.join(lat.meet(ea, eb), lat.meet(ea, ec)))
          return std::vector<std::string>{lat.name(a), lat.name(b), lat.name(c)};
      }
  return std::nullopt;
}

bool classical_cd(const FiniteLattice& lat) { return !classical_cd_witness(lat).has_value(); }

FiniteLattice underlying_lattice(const CompleteOmegaLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::uint8_t> leq(n * n);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) leq[x * n + y] = l.leq(x, y);
  return FiniteLattice(l.cat().objects(), std::move(leq));
}

CheckList classical_cd_check(const QuantalePtr& omega, const std::vector<CompleteOmegaLattice>& corpus,
                        const Budget& budget) {
  CheckList out;
  const bool omega_cd = classical_cd(omega->lattice());
  if (!omega_cd) {
    out.skip("classical_cd.forward", "Omega is not distributive");
  } else {
    std::string w;
    std::size_t used = 0;
    for (const auto& l : corpus) {
      if (!is_cd(l, budget).cd) continue;
      ++used;
      if (auto bad = classical_cd_witness(underlying_lattice(l)); bad && w.empty())
        w = l.cat().label() + ":" + join_names(*bad);
    }
    out.record("classical_cd.forward", w.empty(), w);
    out.pass("classical_cd.corpus_cd_entries", std::to_string(used));
  }
  auto canon = certify_complete(canonical_omega(omega), budget);
  const bool canon_cd = is_cd(canon, budget).cd;
  const bool same_order = underlying_lattice(canon).leq_table() == omega->lattice().leq_table();
  out.record("classical_cd.converse_instance", canon_cd && same_order &&
                                              classical_cd(underlying_lattice(canon)) == omega_cd,
             std::to_string(canon_cd) + std::to_string(same_order));
  return out;
}

}  // namespace oql
