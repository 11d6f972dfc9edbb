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


#include "oql/girard.hpp"

#include <algorithm>
#include <set>

namespace oql {

namespace {

bool is_girard(const Quantale& q) { return classify(q).girard; }

std::vector<Elem> negate(const Quantale& q, std::span<const Elem> phi) {
  std::vector<Elem> out(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) out[i] = q.imp(phi[i], q.bottom());
  return out;
}

void require_pairs(std::size_t n, const Budget& budget, std::string_view what) {
  if (n > 0 && n > budget.limit / n) throw_size_bound(what, n * n, budget);
}

}  // namespace

CheckList girard_inf_check(const QuantalePtr& omega, const Budget& budget) {
  CheckList out;
  const Quantale& q = *omega;
  if (!is_girard(q)) {
    const std::string reason = q.name() + " is not Girard";
    out.skip("inf_formula", reason);
    out.skip("inf_right_adjoint", reason);
    return out;
  }
  const auto c = canonical_omega(omega);
  const auto l = certify_complete(c, budget);
  const auto upper = enumerate_presheaves(c, Variance::Upper, budget);
  const Elem zero = q.bottom();

  std::string bad;
  for (std::size_t k = 0; k < upper.size() && bad.empty(); ++k) {
    auto psi = upper[k];
    if (l.inf(psi) != q.imp(psi[zero], zero)) bad = presheaf_name(q, psi);
  }
  if (bad.empty())
    out.pass("inf_formula", std::to_string(upper.size()) + " upper presheaves");
  else
    out.fail("inf_formula", bad);

  // d(x) is constant at x -> 0; Omega(inf psi, x) = [Omega,Omega](d x, psi).
  bad.clear();
  for (Elem x = 0; x < q.size() && bad.empty(); ++x) {
    std::vector<Elem> dx(q.size(), q.imp(x, zero));
    if (!upper.index_of(dx)) {
      bad = "d(" + q.elem_name(x) + ") not a presheaf";
      break;
    }
    for (std::size_t k = 0; k < upper.size(); ++k) {
      auto psi = upper[k];
      if (q.imp(l.inf(psi), x) != presheaf_hom(q, dx, psi)) {
        bad = presheaf_name(q, psi) + "," + q.elem_name(x);
        break;
      }
    }
  }
  out.record("inf_right_adjoint", bad.empty(), bad);
  return out;
}

CompleteOmegaLattice dual_lattice(const CompleteOmegaLattice& l, const Budget& budget) {
  return certify_complete(dual(l.cat()), budget);
}

CheckList dual_swap_check(const CompleteOmegaLattice& l, const CompleteOmegaLattice& d) {
  CheckList out;
  const Quantale& q = l.omega();
  std::string tensor_bad, cotensor_bad, order_bad;
  for (Elem a = 0; a < q.size(); ++a)
    for (Index x = 0; x < l.size(); ++x) {
      const std::string at = q.elem_name(a) + "," + l.cat().object(x);
      if (tensor_bad.empty() && d.tensor(a, x) != l.cotensor(a, x)) tensor_bad = at;
      if (cotensor_bad.empty() && d.cotensor(a, x) != l.tensor(a, x)) cotensor_bad = at;
    }
  for (Index x = 0; x < l.size() && order_bad.empty(); ++x)
    for (Index y = 0; y < l.size(); ++y)
      if (d.join(x, y) != l.meet(x, y) || d.meet(x, y) != l.join(x, y)) {
        order_bad = l.cat().object(x) + "," + l.cat().object(y);
        break;
      }
  out.record("tensor_is_cotensor", tensor_bad.empty(), tensor_bad);
  out.record("cotensor_is_tensor", cotensor_bad.empty(), cotensor_bad);
  out.record("joins_are_meets", order_bad.empty(), order_bad);
  return out;
}

CdVerdict is_omega_heyting(const CompleteOmegaLattice& l, const Budget& budget) {
  // Finite meets plus the cotensor equation: on finite lattices every meet is
  // finite, so this is the complete distributivity test.
  return is_cd(l, budget);
}

NegationReport negation_iso(const QuantalePtr& omega, const OmegaCategory& l, const Budget& budget) {
  const Quantale& q = *omega;
  if (!is_girard(q)) throw Error(ErrorKind::NotGirard, q.name() + " is not Girard", {q.name()});
  NegationReport rep;
  const auto lower = enumerate_presheaves(l, Variance::Lower, budget);
  const auto upper = enumerate_presheaves(l, Variance::Upper, budget);
  rep.lower = lower.size();
  rep.upper = upper.size();

  std::vector<Index> image(lower.size());
  std::string lands_bad, involution_bad;
  for (std::size_t k = 0; k < lower.size(); ++k) {
    auto phi = lower[k];
    auto n = negate(q, phi);
    auto idx = upper.index_of(n);
    if (!idx) {
      if (lands_bad.empty()) lands_bad = presheaf_name(q, phi);
      continue;
    }
    image[k] = *idx;
    if (involution_bad.empty() && negate(q, n) != std::vector<Elem>(phi.begin(), phi.end()))
      involution_bad = presheaf_name(q, phi);
  }
  rep.checks.record("lands_in_upper", lands_bad.empty(), lands_bad);
  rep.checks.record("involutive", involution_bad.empty(), involution_bad);
  if (!lands_bad.empty()) {
    rep.checks.skip("bijective", "negation leaves the upper presheaves");
    rep.checks.skip("hom_preserving", "negation leaves the upper presheaves");
    return rep;
  }
  std::set<Index> hit(image.begin(), image.end());
  const bool bij = hit.size() == lower.size() && lower.size() == upper.size();
  rep.checks.record("bijective", bij,
                    bij ? std::string{} : std::to_string(lower.size()) + " lower, " + std::to_string(upper.size()) +
                                             " upper, " + std::to_string(hit.size()) + " hit");

  require_pairs(lower.size(), budget, "negation hom table");
  std::string hom_bad;
  for (std::size_t i = 0; i < lower.size() && hom_bad.empty(); ++i)
    for (std::size_t j = 0; j < lower.size(); ++j)
      if (presheaf_hom(q, lower[i], lower[j]) != presheaf_hom(q, upper[image[j]], upper[image[i]])) {
        hom_bad = presheaf_name(q, lower[i]) + "," + presheaf_name(q, lower[j]);
        break;
      }
  rep.checks.record("hom_preserving", hom_bad.empty(), hom_bad);
  return rep;
}

std::vector<CompleteOmegaLattice> default_corpus(const QuantalePtr& omega, const Budget& budget) {
  const auto c = canonical_omega(omega);
  std::vector<CompleteOmegaLattice> out;
  out.push_back(certify_complete(c, budget));
  out.push_back(certify_complete(product(omega, {c, c}), budget));
  const auto chain = chain_category(omega, 2);
  out.push_back(certify_complete(
      presheaf_category(chain, enumerate_presheaves(chain, Variance::Lower, budget), "[2-chain^op,Omega]"), budget));
  return out;
}

DualityReport duality_check(const QuantalePtr& omega, const std::vector<CompleteOmegaLattice>& corpus,
                              const Budget& budget) {
  const Quantale& q = *omega;
  if (!q.integral()) throw Error(ErrorKind::NotIntegral, q.name() + " is not integral", {q.name()});
  DualityReport rep;
  rep.girard = is_girard(q);

  const auto canon = certify_complete(canonical_omega(omega), budget);
  const auto canon_op = dual_lattice(canon, budget);
  rep.checks.append(dual_swap_check(canon, canon_op), "canonical_dual.");
  const auto heyting = is_omega_heyting(canon_op, budget);
  rep.heyting_op = heyting.cd;

  std::vector<std::string> labels;
  for (const auto& l : corpus) {
    const auto d = dual_lattice(l, budget);
    const std::string id = l.cat().label().empty() ? std::to_string(labels.size()) : l.cat().label();
    labels.push_back(id);
    rep.corpus_dual_cd.emplace_back(id, is_cd(d, budget).cd);
  }
  rep.scope = labels.empty() ? "corpus: none" : "corpus: " + join_names(labels, "; ");

  const Elem zero = q.bottom();
  for (Elem a = 0; a < q.size(); ++a)
    if (q.imp(q.imp(a, zero), zero) != a) {
      rep.witness = a;
      break;
    }

  rep.checks.record("girard_iff_heyting_op", rep.girard == rep.heyting_op,
                    std::string("girard=") + (rep.girard ? "true" : "false") +
                        " heyting_op=" + (rep.heyting_op ? "true" : "false"));
  if (rep.girard) {
    std::string bad;
    for (const auto& [id, ok] : rep.corpus_dual_cd)
      if (!ok) bad = id;
    rep.checks.record("corpus_duals_cd", bad.empty(), bad);
    rep.checks.append(girard_inf_check(omega, budget), "inf.");
    rep.checks.append(negation_iso(omega, canon.cat(), budget).checks, "negation.");
  } else {
    rep.checks.record("canonical_dual_not_cd", !heyting.cd,
                      heyting.cd ? std::string{} : "dual of canonical Omega is CD");
    if (!rep.witness) {
      rep.checks.fail("witness", "no element breaks double negation");
    } else {
      // inf over Omega of the constant (alpha -> 0) is (alpha -> 0) -> 0.
      const Elem a = *rep.witness;
      std::vector<Elem> constant(q.size(), q.imp(a, zero));
      const Index inf = canon.inf(constant);
      rep.checks.record("witness", inf != a && inf == q.imp(q.imp(a, zero), zero),
                        q.elem_name(a) + " -> " + canon.cat().object(inf));
    }
    std::string note = heyting.equation;
    if (!heyting.witness.empty()) note += " at " + heyting.witness;
    rep.checks.pass("heyting_op_failure", note);
  }
  return rep;
}

FreeCd free_cd(const QuantalePtr& omega, std::vector<std::string> generators, bool experimental,
               const Budget& budget) {
  const Quantale& q = *omega;
  const bool girard = is_girard(q);
  if (!girard && !experimental)
    throw Error(ErrorKind::NotGirard, q.name() + " is not Girard; free_cd needs the negation duality", {q.name()});
  const std::size_t nodes = saturating_pow(q.size(), saturating_pow(q.size(), generators.size()));
  if (nodes > budget.limit) throw_size_bound("free CD candidates", nodes, budget);

  FreeCd out;
  out.generators = std::move(generators);
  out.experimental = experimental;
  const auto points = discrete(omega, out.generators);
  out.power = all_functions(points, budget);
  out.power_cat = presheaf_category(points, out.power, "[Omega^X]");
  out.upper = enumerate_presheaves(out.power_cat, Variance::Upper, budget);
  out.lattice = certify_complete(dual(presheaf_category(out.power_cat, out.upper, "[[Omega^X],Omega]")), budget);

  const auto cd = is_cd(out.lattice, budget);
  out.checks.record("is_cd", cd.cd, cd.equation + (cd.witness.empty() ? "" : " at " + cd.witness));
  if (girard)
    out.checks.append(negation_iso(omega, out.power_cat, budget).checks, "negation.");
  else
    out.checks.skip("negation", q.name() + " is not Girard");

  std::string unit_bad;
  for (std::size_t x = 0; x < out.generators.size(); ++x) {
    std::vector<Elem> eval(out.power.size());
    for (std::size_t k = 0; k < out.power.size(); ++k) eval[k] = out.power[k][x];
    auto idx = out.upper.index_of(eval);
    if (!idx) {
      if (unit_bad.empty()) unit_bad = out.generators[x];
      out.unit.push_back(0);
    } else {
      out.unit.push_back(*idx);
    }
  }
  out.checks.record("unit_is_presheaf", unit_bad.empty(), unit_bad);
  if (!unit_bad.empty()) throw Error(ErrorKind::Internal, "evaluation at " + unit_bad + " is not a functor");
  return out;
}

Extension extend(const FreeCd& free, const CompleteOmegaLattice& a, const ObjectMap& f, const Budget& budget) {
  const Quantale& q = a.omega();
  if (f.size() != free.generators.size())
    throw Error(ErrorKind::InvalidArgument, "f has " + std::to_string(f.size()) + " values for " +
                                                std::to_string(free.generators.size()) + " generators");
  for (Index v : f)
    if (v >= a.size()) throw Error(ErrorKind::InvalidArgument, "f leaves the target lattice");

  Extension ext;
  const auto lower = enumerate_presheaves(a.cat(), Variance::Lower, budget);
  // Index of each restriction lambda . f in [Omega^X].
  std::vector<Index> restricted(lower.size());
  for (std::size_t k = 0; k < lower.size(); ++k) restricted[k] = free.power.require(pullback(f, lower[k]));

  const std::size_t n = free.lattice.size();
  ext.map.resize(n);
  for (std::size_t g = 0; g < n; ++g) {
    auto big = free.upper[g];
    std::vector<Elem> meet(a.size(), q.top());
    for (std::size_t k = 0; k < lower.size(); ++k) {
      const Elem weight = big[restricted[k]];
      auto lam = lower[k];
      for (Index y = 0; y < a.size(); ++y) meet[y] = q.meet(meet[y], q.imp(weight, lam[y]));
    }
    ext.map[g] = a.sup(meet);
  }

  std::string unit_bad;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (ext.map[free.unit[x]] != f[x]) unit_bad = free.generators[x];
  ext.checks.record("extends_f", unit_bad.empty(), unit_bad);
  ext.checks.record("functor", is_functor(free.lattice.cat(), a.cat(), ext.map));
  ext.checks.append(is_complete_morphism(free.lattice, a, ext.map, budget), "morphism.");

  // g(G) = meet over lambda of G(lambda) >-> join_x lambda(x) (x) f(x).
  std::string formula_bad;
  for (std::size_t g = 0; g < n && formula_bad.empty(); ++g) {
    auto big = free.upper[g];
    std::vector<Index> parts;
    for (std::size_t k = 0; k < free.power.size(); ++k) {
      auto lam = free.power[k];
      Index acc = a.bottom();
      for (std::size_t x = 0; x < f.size(); ++x) acc = a.join(acc, a.tensor(lam[x], f[x]));
      parts.push_back(a.cotensor(big[k], acc));
    }
    if (a.meet_all(parts) != ext.map[g]) formula_bad = free.lattice.cat().object(static_cast<Index>(g));
  }
  ext.checks.record("closed_form", formula_bad.empty(), formula_bad);

  // Uniqueness: all functors pinned to f on the unit, then both adjoints.
  kernels::FunctorSearch search;
  search.dom_size = n;
  search.cod_size = a.size();
  search.dom_hom = free.lattice.cat().hom_table();
  search.cod_hom = a.cat().hom_table();
  search.omega_leq = q.lattice().leq_table();
  search.omega_size = q.size();
  search.allowed.assign(n, {});
  std::vector<std::optional<Index>> pinned(n);
  bool consistent = true;
  for (std::size_t x = 0; x < f.size(); ++x) {
    auto& p = pinned[free.unit[x]];
    if (p && *p != f[x]) consistent = false;
    p = f[x];
  }
  std::size_t agreeing = 0;
  bool unique_is_g = true;
  if (consistent) {
    for (std::size_t g = 0; g < n; ++g) {
      if (pinned[g]) {
        search.allowed[g] = {*pinned[g]};
      } else {
        for (Index y = 0; y < a.size(); ++y) search.allowed[g].push_back(y);
      }
    }
    const auto maps = kernels::enumerate_functors(search, kernels::ExecPolicy::Parallel, budget);
    for (std::size_t i = 0; i < maps.count; ++i) {
      auto h = maps.row(i);
      if (!has_left_adjoint(free.lattice, a, h) || !has_right_adjoint(free.lattice, a, h)) continue;
      ++agreeing;
      if (h != ext.map) unique_is_g = false;
    }
  }
  ext.agreeing_morphisms = agreeing;
  ext.checks.record("unique", agreeing == 1 && unique_is_g,
                    std::to_string(agreeing) + " complete morphisms agree with f");
  return ext;
}

}  // namespace oql
