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


#include "oql/structure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace oql {

namespace {

std::string subset_name(const OmegaCategory& a, const std::vector<Index>& s) {
  std::vector<std::string> names;
  for (Index x : s) names.push_back(a.object(x));
  return "{" + join_names(names) + "}";
}

bool idempotent(const ObjectMap& f) { return compose(f, f) == f; }

std::vector<ObjectMap> bounded_endofunctors(const CompleteOmegaLattice& l, bool above, const Budget& budget) {
  const auto& cat = l.cat();
  kernels::FunctorSearch search;
  search.dom_size = cat.size();
  search.cod_size = cat.size();
  search.dom_hom = cat.hom_table();
  search.cod_hom = cat.hom_table();
  search.omega_leq = l.omega().lattice().leq_table();
  search.omega_size = l.omega().size();
  search.allowed.resize(cat.size());
  for (Index x = 0; x < cat.size(); ++x)
    for (Index y = 0; y < cat.size(); ++y)
      if (above ? l.leq(x, y) : l.leq(y, x)) search.allowed[x].push_back(y);
  auto maps = kernels::enumerate_functors(search, kernels::ExecPolicy::Parallel, budget);
  std::vector<ObjectMap> out;
  for (std::size_t i = 0; i < maps.count; ++i) {
    auto f = maps.row(i);
    if (idempotent(f) && join_tensor_failure(l, l, f).empty()) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

bool closed_subset(const CompleteOmegaLattice& l, const std::vector<Index>& subset) {
  std::vector<bool> in(l.size());
  for (Index x : subset) in.at(x) = true;
  if (!in[l.bottom()] || !in[l.top()]) return false;
  for (Index x : subset) {
    for (Index y : subset)
      if (!in[l.join(x, y)] || !in[l.meet(x, y)]) return false;
    for (std::size_t al = 0; al < l.omega().size(); ++al)
      if (!in[l.tensor(static_cast<Elem>(al), x)] || !in[l.cotensor(static_cast<Elem>(al), x)]) return false;
  }
  return true;
}

CheckList is_subalgebra(const CompleteOmegaLattice& l, const std::vector<Index>& subset, const Budget& budget) {
  std::vector<Index> s = subset;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw Error(ErrorKind::InvalidArgument, "empty subset");
  CheckList out;
  const auto& cat = l.cat();
  const std::string tag = subset_name(cat, s);
  const bool closed = closed_subset(l, s);
  out.record("b_closed_under_operations", closed, tag);
  auto sub = subcategory(cat, s);
  const bool adjoints =
      !find_left_adjoints(cat, sub, s, budget).empty() && !find_right_adjoints(sub, cat, s, budget).empty();
  out.record("c_embedding_has_both_adjoints", adjoints, tag);
  std::optional<bool> preserves;
  try {
    auto m = certify_complete(sub, budget);
    auto lower = enumerate_presheaves(sub, Variance::Lower, budget);
    auto upper = enumerate_presheaves(sub, Variance::Upper, budget);
    bool ok = true;
    for (std::size_t k = 0; k < lower.size() && ok; ++k)
      ok = s[m.sup(lower[k])] == l.sup(image(cat, s, lower[k]));
    for (std::size_t k = 0; k < upper.size() && ok; ++k)
      ok = s[m.inf(upper[k])] == l.inf(image(cat, s, upper[k]));
    preserves = ok;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SizeBound) {
      out.skip("a_embedding_preserves_sup_inf", "budget");
    } else {
      preserves = false;  // the subset is not even complete
    }
  }
  if (preserves) out.record("a_embedding_preserves_sup_inf", *preserves, tag);
  const bool agree = closed == adjoints && (!preserves || *preserves == closed);
  out.record("conditions_agree", agree, tag);
  return out;
}

std::vector<std::vector<Index>> enumerate_subalgebras(const CompleteOmegaLattice& l, const Budget& budget) {
  const std::size_t n = l.size();
  const std::size_t w = l.omega().size();
  auto close = [&](std::vector<bool> in) {
    std::vector<Index> members;
    for (Index x = 0; x < n; ++x)
      if (in[x]) members.push_back(x);
    for (std::size_t i = 0; i < members.size(); ++i) {
      const Index x = members[i];
      auto add = [&](Index y) {
        if (!in[y]) {
          in[y] = true;
          members.push_back(y);
        }
      };
      for (std::size_t j = 0; j <= i; ++j) {
        add(l.join(x, members[j]));
        add(l.meet(x, members[j]));
      }
      for (std::size_t al = 0; al < w; ++al) {
        add(l.tensor(static_cast<Elem>(al), x));
        add(l.cotensor(static_cast<Elem>(al), x));
      }
    }
    return in;
  };
  std::vector<bool> seed(n);
  seed[l.bottom()] = seed[l.top()] = true;
  std::set<std::vector<bool>> seen{close(seed)};
  std::deque<std::vector<bool>> queue(seen.begin(), seen.end());
  while (!queue.empty()) {
    auto cur = std::move(queue.front());
    queue.pop_front();
    for (Index x = 0; x < n; ++x) {
      if (cur[x]) continue;
      auto next = cur;
      next[x] = true;
      next = close(std::move(next));
      if (seen.insert(next).second) {
        if (seen.size() > budget.limit) throw_size_bound("subalgebra enumeration", seen.size(), budget);
        queue.push_back(std::move(next));
      }
    }
  }
  std::vector<std::vector<Index>> out;
  for (const auto& in : seen) {
    std::vector<Index> s;
    for (Index x = 0; x < n; ++x)
      if (in[x]) s.push_back(x);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckList closure_operator_check(const CompleteOmegaLattice& l, const ObjectMap& c) {
  CheckList out;
  auto bad = functor_violation(l.cat(), l.cat(), c);
  out.record("functor", !bad, bad ? l.cat().object(bad->first) + "," + l.cat().object(bad->second) : "");
  out.record("idempotent", idempotent(c), map_name(l.cat(), c));
  std::string w;
  for (Index x = 0; x < l.size() && w.empty(); ++x)
    if (!l.leq(x, c[x])) w = l.cat().object(x);
  out.record("inflationary", w.empty(), w);
  w = join_tensor_failure(l, l, c);
  out.record("cocontinuous", w.empty(), w);
  return out;
}

CheckList kernel_operator_check(const CompleteOmegaLattice& l, const ObjectMap& k) {
  CheckList out;
  auto bad = functor_violation(l.cat(), l.cat(), k);
  out.record("functor", !bad, bad ? l.cat().object(bad->first) + "," + l.cat().object(bad->second) : "");
  out.record("idempotent", idempotent(k), map_name(l.cat(), k));
  std::string w;
  for (Index x = 0; x < l.size() && w.empty(); ++x)
    if (!l.leq(k[x], x)) w = l.cat().object(x);
  out.record("deflationary", w.empty(), w);
  w = join_tensor_failure(l, l, k);
  out.record("cocontinuous", w.empty(), w);
  return out;
}

std::vector<ObjectMap> enumerate_cocontinuous_closures(const CompleteOmegaLattice& l, const Budget& budget) {
  return bounded_endofunctors(l, true, budget);
}

std::vector<ObjectMap> enumerate_cocontinuous_kernels(const CompleteOmegaLattice& l, const Budget& budget) {
  return bounded_endofunctors(l, false, budget);
}

ObjectMap closure_of_subalgebra(const CompleteOmegaLattice& l, const std::vector<Index>& subset) {
  ObjectMap c(l.size());
  for (Index x = 0; x < l.size(); ++x) {
    Index m = l.top();
    for (Index y : subset)
      if (l.leq(x, y)) m = l.meet(m, y);
    c[x] = m;
  }
  return c;
}

std::vector<Index> subalgebra_of_closure(const ObjectMap& c) {
  std::vector<Index> s(c.begin(), c.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

BijectionReport closure_bijection_check(const CompleteOmegaLattice& l, const Budget& budget) {
  BijectionReport r;
  const auto subs = enumerate_subalgebras(l, budget);
  const auto closures = enumerate_cocontinuous_closures(l, budget);
  r.left_count = subs.size();
  r.right_count = closures.size();
  const std::set<std::vector<Index>> sub_set(subs.begin(), subs.end());
  const std::set<ObjectMap> closure_set(closures.begin(), closures.end());
  const auto& cat = l.cat();
  std::string wv, wc, wr;
  for (const auto& s : subs) {
    if (wv.empty() && !is_subalgebra(l, s, budget).all_ok()) wv = subset_name(cat, s);
    auto c = closure_of_subalgebra(l, s);
    if (wc.empty() && (!closure_set.count(c) || !closure_operator_check(l, c).all_ok())) wc = subset_name(cat, s);
    if (wr.empty() && subalgebra_of_closure(c) != s) wr = subset_name(cat, s);
  }
  r.checks.record("subalgebras_verified", wv.empty(), wv);
  r.checks.record("closure_of_subalgebra_is_cocontinuous", wc.empty(), wc);
  r.checks.record("round_trip_from_subalgebra", wr.empty(), wr);
  std::string ws, wt;
  for (const auto& c : closures) {
    auto s = subalgebra_of_closure(c);
    if (ws.empty() && !sub_set.count(s)) ws = map_name(cat, c);
    if (wt.empty() && closure_of_subalgebra(l, s) != c) wt = map_name(cat, c);
  }
  r.checks.record("image_of_closure_is_subalgebra", ws.empty(), ws);
  r.checks.record("round_trip_from_closure", wt.empty(), wt);
  r.checks.record("cardinalities_agree", r.left_count == r.right_count,
                  std::to_string(r.left_count) + "/" + std::to_string(r.right_count));
  return r;
}

QuotientPresentation quotient_of_kernel(const CompleteOmegaLattice& l, const ObjectMap& k, const Budget& budget) {
  auto kc = kernel_operator_check(l, k);
  for (const auto& c : kc.items())
    if (!c.ok) throw Error(ErrorKind::InvalidArgument, "not a cocontinuous kernel operator: " + c.name, {c.witness});
  const auto& cat = l.cat();
  const Quantale& q = l.omega();
  QuotientPresentation p;
  p.representative = subalgebra_of_closure(k);
  std::map<Index, Index> class_of;
  for (Index i = 0; i < p.representative.size(); ++i) class_of[p.representative[i]] = i;
  p.classes.resize(p.representative.size());
  p.quotient.resize(l.size());
  for (Index x = 0; x < l.size(); ++x) {
    p.quotient[x] = class_of.at(k[x]);
    p.classes[p.quotient[x]].push_back(x);
  }
  const std::size_t m = p.representative.size();
  std::vector<std::string> names;
  std::vector<Elem> hom(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back("[" + cat.object(p.representative[i]) + "]");
    for (std::size_t j = 0; j < m; ++j) hom[i * m + j] = cat.hom(p.representative[i], p.representative[j]);
  }
  p.lattice = certify_complete(OmegaCategory(l.quantale(), std::move(names), std::move(hom), cat.label() + "/k"), budget);

  std::string wd, w1, w2, w3, w4;
  for (Index x = 0; x < l.size(); ++x)
    for (Index y = 0; y < l.size(); ++y) {
      if (wd.empty() && cat.hom(k[x], k[y]) != p.lattice.hom(p.quotient[x], p.quotient[y]))
        wd = cat.object(x) + "," + cat.object(y);
      for (Index x2 : p.classes[p.quotient[x]])
        for (Index y2 : p.classes[p.quotient[y]]) {
          const std::string tag = cat.object(x) + "~" + cat.object(x2) + "," + cat.object(y) + "~" + cat.object(y2);
          if (w1.empty() && k[l.join(x, y)] != k[l.join(x2, y2)]) w1 = tag;
          if (w3.empty() && k[l.meet(x, y)] != k[l.meet(x2, y2)]) w3 = tag;
        }
    }
  for (Index x = 0; x < l.size(); ++x)
    for (Index x2 : p.classes[p.quotient[x]])
      for (std::size_t al = 0; al < q.size(); ++al) {
        const Elem alpha = static_cast<Elem>(al);
        const std::string tag = q.elem_name(alpha) + "," + cat.object(x) + "~" + cat.object(x2);
        if (w2.empty() && k[l.tensor(alpha, x)] != k[l.tensor(alpha, x2)]) w2 = tag;
        if (w4.empty() && k[l.cotensor(alpha, x)] != k[l.cotensor(alpha, x2)]) w4 = tag;
      }
  p.checks.record("hom_well_defined", wd.empty(), wd);
  p.checks.record("joins_respected", w1.empty(), w1);
  p.checks.record("tensors_respected", w2.empty(), w2);
  p.checks.record("meets_respected", w3.empty(), w3);
  p.checks.record("cotensors_respected", w4.empty(), w4);
  auto bad = functor_violation(cat, p.lattice.cat(), p.quotient);
  p.checks.record("quotient_is_functor", !bad, bad ? cat.object(bad->first) + "," + cat.object(bad->second) : "");
  auto lefts = find_left_adjoints(p.lattice.cat(), cat, p.quotient, budget);
  auto rights = find_right_adjoints(cat, p.lattice.cat(), p.quotient, budget);
  p.checks.record("quotient_has_left_adjoint", !lefts.empty(), map_name(p.lattice.cat(), p.quotient));
  p.checks.record("quotient_has_right_adjoint", !rights.empty(), map_name(p.lattice.cat(), p.quotient));
  if (!lefts.empty()) {
    p.left_adjoint = lefts.front();
    p.checks.record("kernel_recovered", compose(p.left_adjoint, p.quotient) == k, map_name(cat, p.left_adjoint));
  }
  if (!rights.empty()) p.right_adjoint = rights.front();
  return p;
}

ObjectMap kernel_of_quotient(const CompleteOmegaLattice& l, const CompleteOmegaLattice& m, const ObjectMap& q,
                             const Budget& budget) {
  auto lefts = find_left_adjoints(m.cat(), l.cat(), q, budget);
  if (lefts.empty()) throw Error(ErrorKind::NoAdjoint, "quotient map has no left adjoint", {map_name(m.cat(), q)});
  return compose(lefts.front(), q);
}

BijectionReport kernel_bijection_check(const CompleteOmegaLattice& l, const Budget& budget) {
  BijectionReport r;
  const auto& cat = l.cat();
  const std::size_t n = l.size();
  const auto kernels = enumerate_cocontinuous_kernels(l, budget);
  const std::set<ObjectMap> kernel_set(kernels.begin(), kernels.end());

  // Restricted growth strings enumerate the set partitions of the objects.
  std::vector<ObjectMap> partition_kernels;
  std::vector<Index> rgs(n, 0), maxes(n, 0);
  std::uint64_t visited = 0;
  std::string wq;
  for (bool more = n > 0; more;) {
    if (++visited > budget.limit) throw_size_bound("partition enumeration", visited, budget);
    const Index classes = n ? *std::max_element(rgs.begin(), rgs.end()) + 1 : 0;
    std::vector<std::vector<Index>> members(classes);
    for (Index x = 0; x < n; ++x) members[rgs[x]].push_back(x);
    std::vector<Index> least(classes);
    bool ok = true;
    for (Index c = 0; c < classes && ok; ++c) {
      bool found = false;
      for (Index cand : members[c]) {
        bool below = true;
        for (Index y : members[c]) below = below && l.leq(cand, y);
        if (below) {
          least[c] = cand;
          found = true;
          break;
        }
      }
      ok = found;
    }
    if (ok) {
      std::vector<Elem> hom(std::size_t{classes} * classes);
      std::vector<std::string> names;
      for (Index c = 0; c < classes; ++c) {
        names.push_back("[" + cat.object(least[c]) + "]");
        for (Index d = 0; d < classes; ++d) hom[c * classes + d] = cat.hom(least[c], least[d]);
      }
      try {
        OmegaCategory b(l.quantale(), names, hom, "partition");
        ObjectMap q(rgs.begin(), rgs.end());
        if (is_functor(cat, b, q) && !find_left_adjoints(b, cat, q, budget).empty() &&
            !find_right_adjoints(cat, b, q, budget).empty()) {
          ObjectMap k(n);
          for (Index x = 0; x < n; ++x) k[x] = least[rgs[x]];
          auto m = certify_complete(b, budget);
          if (wq.empty() && kernel_of_quotient(l, m, q, budget) != k) wq = map_name(cat, k);
          partition_kernels.push_back(std::move(k));
        }
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::SizeBound) throw;
      }
    }
    // Next restricted growth string.
    more = false;
    for (std::size_t i = n; i-- > 1;) {
      if (rgs[i] <= maxes[i - 1]) {
        ++rgs[i];
        for (std::size_t j = i + 1; j < n; ++j) rgs[j] = 0;
        for (std::size_t j = i; j < n; ++j) maxes[j] = std::max(maxes[j - 1], rgs[j]);
        more = true;
        break;
      }
    }
  }
  r.left_count = partition_kernels.size();
  r.right_count = kernels.size();
  r.checks.record("kernel_of_quotient_is_least_representative", wq.empty(), wq);
  std::string wk, wr;
  for (const auto& k : partition_kernels)
    if (wk.empty() && !kernel_set.count(k)) wk = map_name(cat, k);
  r.checks.record("quotient_kernels_are_cocontinuous", wk.empty(), wk);
  std::set<ObjectMap> from_partitions(partition_kernels.begin(), partition_kernels.end());
  for (const auto& k : kernels) {
    if (!from_partitions.count(k) && wr.empty()) wr = map_name(cat, k);
    auto p = quotient_of_kernel(l, k, budget);
    if (!p.checks.all_ok() && wr.empty()) wr = map_name(cat, k);
    if (wr.empty() && p.quotient != compose(p.quotient, k)) wr = map_name(cat, k);
  }
  r.checks.record("round_trip_from_kernel", wr.empty(), wr);
  r.checks.record("cardinalities_agree", r.left_count == r.right_count,
                  std::to_string(r.left_count) + "/" + std::to_string(r.right_count));
  return r;
}

TransferredCd subalgebra_cd(const CompleteOmegaLattice& l, const DownarrowOperator& down_l,
                            const std::vector<Index>& subset, const Budget& budget) {
  TransferredCd t;
  t.target = certify_complete(subcategory(l.cat(), subset), budget);
  const auto& m = t.target;
  auto lefts = find_left_adjoints(l.cat(), m.cat(), subset, budget);
  if (lefts.empty()) throw Error(ErrorKind::NoAdjoint, "embedding has no left adjoint", {subset_name(l.cat(), subset)});
  const ObjectMap& k = lefts.front();
  for (Index x = 0; x < m.size(); ++x)
    t.table.push_back(left_kan(l.cat(), m.cat(), k, down_l.table[subset[x]], Variance::Lower));
  t.generic = downarrow(m, budget);
  std::string w;
  for (std::size_t i = 0; i < t.generic.lower.size() && w.empty(); ++i) {
    auto phi = t.generic.lower[i];
    if (pullback(k, phi) != left_kan(m.cat(), l.cat(), subset, phi, Variance::Lower))
      w = presheaf_name(l.omega(), phi);
  }
  t.checks.record("restriction_equals_extension", w.empty(), w);
  w.clear();
  for (Index x = 0; x < m.size() && w.empty(); ++x)
    if (t.table[x] != t.generic.table[x]) w = m.cat().object(x);
  t.checks.record("composite_equals_generic", w.empty(), w);
  return t;
}

TransferredCd quotient_cd(const CompleteOmegaLattice& l, const DownarrowOperator& down_l,
                          const CompleteOmegaLattice& m, const ObjectMap& q, const Budget& budget) {
  TransferredCd t;
  t.target = m;
  auto lefts = find_left_adjoints(m.cat(), l.cat(), q, budget);
  if (lefts.empty()) throw Error(ErrorKind::NoAdjoint, "quotient map has no left adjoint", {map_name(m.cat(), q)});
  const ObjectMap& j = lefts.front();
  for (Index y = 0; y < m.size(); ++y)
    t.table.push_back(left_kan(l.cat(), m.cat(), q, down_l.table[j[y]], Variance::Lower));
  t.generic = downarrow(m, budget);
  std::string w;
  for (Index y = 0; y < m.size() && w.empty(); ++y)
    if (t.table[y] != t.generic.table[y]) w = m.cat().object(y);
  t.checks.record("composite_equals_generic", w.empty(), w);
  return t;
}

RaneyBuchi raney_buchi(const CompleteOmegaLattice& l, const Budget& budget) {
  const auto verdict = is_cd(l, budget);
  if (!verdict.cd) throw Error(ErrorKind::NotCD, verdict.equation, {verdict.witness});
  const auto& cat = l.cat();
  RaneyBuchi rb;
  auto points = discrete(l.quantale(), cat.objects());
  auto functions = all_functions(cat, budget);
  rb.ambient = certify_complete(presheaf_category(points, functions, "[Omega^" + cat.label() + "]"), budget);
  auto lower = enumerate_presheaves(cat, Variance::Lower, budget);
  rb.presheaves = certify_complete(presheaf_category(cat, lower), budget);
  for (std::size_t k = 0; k < lower.size(); ++k) {
    rb.embedding.push_back(functions.require(lower[k]));
    rb.sup.push_back(l.sup(lower[k]));
  }
  for (std::size_t k = 0; k < functions.size(); ++k) rb.closure.push_back(lower.require(down_close(cat, functions[k])));
  auto down = downarrow(l, lower);
  for (Index a = 0; a < l.size(); ++a) {
    rb.down.push_back(lower.require(down.table[a]));
    rb.yoneda.push_back(lower.require(yoneda(cat, a).values));
  }

  rb.checks.append(is_subalgebra(rb.ambient, rb.embedding, budget), "subalgebra");
  rb.checks.append(check_adjunction(rb.ambient.cat(), rb.presheaves.cat(), {rb.closure, rb.embedding}),
                   "subalgebra.closure_left_adjoint");
  rb.checks.record("quotient.sup_surjective", subalgebra_of_closure(rb.sup).size() == l.size(), "");
  rb.checks.append(check_adjunction(cat, rb.presheaves.cat(), {rb.down, rb.sup}), "quotient.down_left_adjoint");
  rb.checks.append(check_adjunction(rb.presheaves.cat(), cat, {rb.sup, rb.yoneda}), "quotient.yoneda_right_adjoint");
  rb.checks.record("cd", verdict.cd, verdict.witness);
  rb.checks.record("sup_after_down_is_id", compose(rb.sup, rb.down) == identity_map(l.size()),
                   map_name(cat, compose(rb.sup, rb.down)));

  // Converse pipeline: power -> subalgebra -> quotient.
  auto down_ambient = downarrow(rb.ambient, budget);
  auto on_presheaves = subalgebra_cd(rb.ambient, down_ambient, rb.embedding, budget);
  rb.checks.append(on_presheaves.checks, "sufficiency.subalgebra");
  DownarrowOperator transferred{on_presheaves.generic.lower, on_presheaves.table, {}};
  auto on_l = quotient_cd(rb.presheaves, transferred, l, rb.sup, budget);
  rb.checks.append(on_l.checks, "sufficiency.quotient");
  rb.checks.record("sufficiency.recovers_operator", on_l.table == down.table, "");
  return rb;
}

LeftAdjointLattice left_adjoint_lattice(const CompleteOmegaLattice& a, const CompleteOmegaLattice& b,
                                        const Budget& budget) {
  LeftAdjointLattice out;
  out.functors = functor_lattice(a.cat(), b, budget);
  const auto& fl = out.functors.lattice;
  std::string ws;
  for (Index i = 0; i < out.functors.maps.size(); ++i) {
    const auto& f = out.functors.maps[i];
    const bool shortcut = join_tensor_failure(a, b, f).empty();
    const bool found = !find_right_adjoints(a.cat(), b.cat(), f, budget).empty();
    if (shortcut != found && ws.empty()) ws = fl.cat().object(i);
    if (found) out.left_adjoints.push_back(i);
  }
  out.checks.record("tensor_join_shortcut_agrees", ws.empty(), ws);
  out.lattice = certify_complete(subcategory(fl.cat(), out.left_adjoints), budget);
  std::vector<bool> in(fl.size());
  for (Index i : out.left_adjoints) in[i] = true;
  std::string wj = in[fl.bottom()] ? "" : "bottom", wt;
  for (Index i : out.left_adjoints) {
    for (Index j : out.left_adjoints)
      if (wj.empty() && !in[fl.join(i, j)]) wj = fl.cat().object(i) + "," + fl.cat().object(j);
    for (std::size_t al = 0; al < a.omega().size(); ++al)
      if (wt.empty() && !in[fl.tensor(static_cast<Elem>(al), i)])
        wt = a.omega().elem_name(static_cast<Elem>(al)) + "," + fl.cat().object(i);
  }
  out.checks.record("pointwise_joins_stay", wj.empty(), wj);
  out.checks.record("pointwise_tensors_stay", wt.empty(), wt);
  out.checks.pass("subalgebra_of_functor_lattice", closed_subset(fl, out.left_adjoints) ? "yes" : "no");
  return out;
}

KernelOnFunctors functor_kernel(const CompleteOmegaLattice& a, const CompleteOmegaLattice& b, const Budget& budget) {
  KernelOnFunctors t;
  t.left = left_adjoint_lattice(a, b, budget);
  t.down_a = downarrow(a, budget);
  const auto& maps = t.left.functors.maps;
  const auto& fl = t.left.functors.lattice;
  const Quantale& q = a.omega();
  std::map<ObjectMap, Index> index;
  for (Index i = 0; i < maps.size(); ++i) index.emplace(maps[i], i);
  std::string w6;
  t.kernel.resize(maps.size());
  for (Index i = 0; i < maps.size(); ++i) {
    ObjectMap g(a.size());
    for (Index x = 0; x < a.size(); ++x) {
      Index v = b.bottom();
      for (Index z = 0; z < a.size(); ++z) v = b.join(v, b.tensor(t.down_a.table[x][z], maps[i][z]));
      g[x] = v;
    }
    auto it = index.find(g);
    if (it == index.end()) {
      if (w6.empty()) w6 = fl.cat().object(i);
      t.kernel[i] = i;
    } else {
      t.kernel[i] = it->second;
    }
  }
  const auto& k = t.kernel;
  const auto& fc = fl.cat();
  std::string w1, w2, w3, w4, w5;
  for (Index i = 0; i < maps.size(); ++i) {
    if (w2.empty() && !fl.leq(k[i], i)) w2 = fc.object(i);
    if (w3.empty() && k[k[i]] != k[i]) w3 = fc.object(i);
    for (Index j = 0; j < maps.size(); ++j) {
      if (w1.empty() && fl.leq(i, j) && !fl.leq(k[i], k[j])) w1 = fc.object(i) + "," + fc.object(j);
      if (w5.empty() && k[fl.join(i, j)] != fl.join(k[i], k[j])) w5 = fc.object(i) + "," + fc.object(j);
      if (w6.empty() && !q.leq(fl.hom(i, j), fl.hom(k[i], k[j]))) w6 = fc.object(i) + "," + fc.object(j);
    }
    for (std::size_t al = 0; al < q.size(); ++al) {
      const Elem alpha = static_cast<Elem>(al);
      if (w4.empty() && k[fl.tensor(alpha, i)] != fl.tensor(alpha, k[i])) w4 = q.elem_name(alpha) + "," + fc.object(i);
    }
  }
  if (w5.empty() && k[fl.bottom()] != fl.bottom()) w5 = "bottom";
  t.checks.record("monotone", w1.empty(), w1);
  t.checks.record("deflationary", w2.empty(), w2);
  t.checks.append(interpolate_check(a, t.down_a), "interpolation.");
  t.checks.record("idempotent", w3.empty(), w3);
  t.checks.record("preserves_tensors", w4.empty(), w4);
  t.checks.record("preserves_joins", w5.empty(), w5);
  t.checks.record("functor", w6.empty(), w6);

  auto lower_a = enumerate_presheaves(a.cat(), Variance::Lower, budget);
  for (Index i = 0; i < maps.size(); ++i) {
    if (k[i] == i) t.fixed.push_back(i);
    if (sup_preservation_failure(a, b, maps[i], lower_a).empty()) t.cocontinuous.push_back(i);
  }
  t.checks.record("fixed_points_are_cocontinuous", t.fixed == t.cocontinuous,
                  std::to_string(t.fixed.size()) + "/" + std::to_string(t.cocontinuous.size()));
  t.checks.record("fixed_points_are_left_adjoints", t.fixed == t.left.left_adjoints,
                  std::to_string(t.fixed.size()) + "/" + std::to_string(t.left.left_adjoints.size()));
  t.quotient = quotient_of_kernel(fl, k, budget);
  t.checks.append(t.quotient.checks, "quotient");
  bool iso = t.quotient.representative == t.left.left_adjoints;
  for (Index i = 0; iso && i < t.quotient.lattice.size(); ++i)
    for (Index j = 0; iso && j < t.quotient.lattice.size(); ++j)
      iso = t.quotient.lattice.hom(i, j) == t.left.lattice.hom(i, j);
  t.checks.record("quotient_isomorphic_to_left_adjoints", iso, "");
  const auto cd = is_cd(t.quotient.lattice, budget);
  t.checks.record("quotient_is_cd", cd.cd, cd.equation + " " + cd.witness);
  return t;
}

CheckList right_adjoint_duality(const OmegaCategory& a, const OmegaCategory& b, const Budget& budget) {
  CheckList out;
  const Quantale& q = a.omega();
  auto fc = functor_category(a, b, budget);
  std::vector<Adjunction> pairs;
  for (const auto& f : fc.maps) {
    auto rights = find_right_adjoints(a, b, f, budget);
    if (!rights.empty()) pairs.push_back({f, rights.front()});
  }
  std::string w;
  for (const auto& p1 : pairs)
    for (const auto& p2 : pairs) {
      Elem lhs = q.top(), rhs = q.top();
      for (Index x = 0; x < a.size(); ++x) lhs = q.meet(lhs, b.hom(p1.left[x], p2.left[x]));
      for (Index y = 0; y < b.size(); ++y) rhs = q.meet(rhs, a.hom(p2.right[y], p1.right[y]));
      if (lhs != rhs && w.empty()) w = map_name(b, p1.left) + "," + map_name(b, p2.left);
    }
  out.record("hom_duality", w.empty(), w);
  std::set<ObjectMap> rights;
  for (const auto& p : pairs) rights.insert(p.right);
  out.record("right_adjoints_distinct", rights.size() == pairs.size(), std::to_string(rights.size()));
  out.pass("adjunctions", std::to_string(pairs.size()));
  return out;
}

}  // namespace oql
