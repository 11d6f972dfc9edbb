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


#include "oql/category.hpp"

#include <algorithm>
#include <set>

namespace oql {

OmegaCategory::OmegaCategory(QuantalePtr omega, std::vector<std::string> objects, std::vector<Elem> hom,
                             std::string label)
    : omega_(std::move(omega)), objects_(std::move(objects)), hom_(std::move(hom)), label_(std::move(label)) {
  if (!omega_) throw Error(ErrorKind::InvalidArgument, "category without a quantale");
  const std::size_t n = objects_.size();
  if (hom_.size() != n * n) throw Error(ErrorKind::InvalidArgument, "hom table is not total over the objects");
  for (Elem v : hom_)
    if (v >= omega_->size()) throw Error(ErrorKind::InvalidArgument, "hom value outside the quantale");
  const Quantale& q = *omega_;
  for (std::size_t a = 0; a < n; ++a)
    if (!q.leq(q.unit(), hom_[a * n + a])) throw Error(ErrorKind::ReflexivityFails, "I !<= hom(a,a)", {objects_[a]});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Elem ab = hom_[a * n + b];
      if (ab == q.bottom()) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (!q.leq(q.tensor(ab, hom_[b * n + c]), hom_[a * n + c]))
          throw Error(ErrorKind::TransitivityFails, "hom(a,b)*hom(b,c) !<= hom(a,c)",
                      {objects_[a], objects_[b], objects_[c]});
    }
}

std::optional<Index> OmegaCategory::find(std::string_view name) const {
  for (std::size_t i = 0; i < objects_.size(); ++i)
    if (objects_[i] == name) return static_cast<Index>(i);
  return std::nullopt;
}

OmegaCategory check_category(QuantalePtr omega, std::vector<std::string> objects, std::vector<Elem> hom,
                             std::string label) {
  return OmegaCategory(std::move(omega), std::move(objects), std::move(hom), std::move(label));
}

OmegaCategory dual(const OmegaCategory& a) {
  const std::size_t n = a.size();
  std::vector<Elem> hom(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) hom[x * n + y] = a.hom(static_cast<Index>(y), static_cast<Index>(x));
  std::string label = a.label();
  if (label.size() > 3 && label.ends_with("^op"))
    label.resize(label.size() - 3);
  else
    label += "^op";
  return OmegaCategory(a.quantale(), a.objects(), std::move(hom), std::move(label));
}

OmegaCategory discrete(QuantalePtr omega, std::vector<std::string> objects) {
  const std::size_t n = objects.size();
  std::vector<Elem> hom(n * n, omega->bottom());
  for (std::size_t x = 0; x < n; ++x) hom[x * n + x] = omega->unit();
  return OmegaCategory(omega, std::move(objects), std::move(hom), "discrete(" + std::to_string(n) + ")");
}

OmegaCategory discrete(QuantalePtr omega, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i));
  return discrete(std::move(omega), std::move(names));
}

OmegaCategory terminal(QuantalePtr omega) {
  Elem top = omega->top();
  return OmegaCategory(omega, {"*"}, {top}, "terminal");
}

OmegaCategory subcategory(const OmegaCategory& a, const std::vector<Index>& subset) {
  const std::size_t m = subset.size();
  std::vector<std::string> names;
  std::vector<Elem> hom(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(a.object(subset[i]));
    for (std::size_t j = 0; j < m; ++j) hom[i * m + j] = a.hom(subset[i], subset[j]);
  }
  return OmegaCategory(a.quantale(), std::move(names), std::move(hom), a.label() + "|sub");
}

OmegaCategory product(QuantalePtr omega, const std::vector<OmegaCategory>& factors) {
  if (factors.empty()) return terminal(omega);
  std::size_t total = 1;
  for (const auto& f : factors) total *= f.size();
  std::vector<std::vector<Index>> tuples;
  std::vector<Index> cur(factors.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    tuples.push_back(cur);
    for (std::size_t i = factors.size(); i-- > 0;) {
      if (++cur[i] < factors[i].size()) break;
      cur[i] = 0;
    }
  }
  std::vector<std::string> names;
  for (const auto& t : tuples) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + factors[i].object(t[i]);
    names.push_back(s + ")");
  }
  std::vector<Elem> hom(total * total);
  for (std::size_t x = 0; x < total; ++x)
    for (std::size_t y = 0; y < total; ++y) {
      Elem m = omega->top();
      for (std::size_t i = 0; i < factors.size(); ++i) m = omega->meet(m, factors[i].hom(tuples[x][i], tuples[y][i]));
      hom[x * total + y] = m;
    }
  std::string label;
  for (std::size_t i = 0; i < factors.size(); ++i) label += (i ? " x " : "") + factors[i].label();
  return OmegaCategory(omega, std::move(names), std::move(hom), label);
}

OmegaCategory canonical_omega(QuantalePtr omega) {
  const std::size_t n = omega->size();
  std::vector<Elem> hom(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) hom[a * n + b] = omega->imp(static_cast<Elem>(a), static_cast<Elem>(b));
  return OmegaCategory(omega, omega->lattice().names(), std::move(hom), "Omega(" + omega->name() + ")");
}

OmegaCategory chain_category(QuantalePtr omega, std::size_t n) {
  std::vector<std::string> names;
  if (n == 2) {
    names = {"bot", "top"};
  } else {
    for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  }
  std::vector<Elem> hom(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) hom[i * n + j] = i <= j ? omega->unit() : omega->bottom();
  return OmegaCategory(omega, std::move(names), std::move(hom), "chain(" + std::to_string(n) + ")");
}

std::string map_name(const OmegaCategory& cod, const ObjectMap& f) {
  std::string s = "<";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + cod.object(f[i]);
  return s + ">";
}

FunctorCategory functor_category(const OmegaCategory& a, const OmegaCategory& b, const Budget& budget,
                                 kernels::ExecPolicy policy) {
  kernels::FunctorSearch search;
  search.dom_size = a.size();
  search.cod_size = b.size();
  search.dom_hom = a.hom_table();
  search.cod_hom = b.hom_table();
  search.omega_leq = a.omega().lattice().leq_table();
  search.omega_size = a.omega().size();
  auto maps = kernels::enumerate_functors(search, policy, budget);
  FunctorCategory out;
  for (std::size_t k = 0; k < maps.count; ++k) out.maps.push_back(maps.row(k));
  const Quantale& q = a.omega();
  const std::size_t m = out.maps.size();
  std::vector<Elem> hom(m * m);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(map_name(b, out.maps[i]));
    for (std::size_t j = 0; j < m; ++j) {
      Elem v = q.top();
      for (std::size_t x = 0; x < a.size(); ++x) v = q.meet(v, b.hom(out.maps[i][x], out.maps[j][x]));
      hom[i * m + j] = v;
    }
  }
  out.category = OmegaCategory(a.quantale(), std::move(names), std::move(hom), "[" + a.label() + "," + b.label() + "]");
  return out;
}

std::vector<std::uint8_t> underlying_preorder(const OmegaCategory& a) {
  const std::size_t n = a.size();
  std::vector<std::uint8_t> rel(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rel[x * n + y] = a.leq(static_cast<Index>(x), static_cast<Index>(y));
  return rel;
}

bool isomorphic_objects(const OmegaCategory& a, Index x, Index y) { return a.leq(x, y) && a.leq(y, x); }

bool is_antisymmetric(const OmegaCategory& a) {
  for (Index x = 0; x < a.size(); ++x)
    for (Index y = x + 1; y < a.size(); ++y)
      if (isomorphic_objects(a, x, y)) return false;
  return true;
}

std::optional<std::pair<Index, Index>> functor_violation(const OmegaCategory& dom, const OmegaCategory& cod,
                                                         const ObjectMap& f) {
  if (f.size() != dom.size()) throw Error(ErrorKind::InvalidArgument, "object map is not total");
  const Quantale& q = dom.omega();
  for (Index x = 0; x < dom.size(); ++x) {
    if (f[x] >= cod.size()) throw Error(ErrorKind::InvalidArgument, "object map leaves the codomain");
    for (Index y = 0; y < dom.size(); ++y)
      if (!q.leq(dom.hom(x, y), cod.hom(f[x], f[y]))) return std::pair{x, y};
  }
  return std::nullopt;
}

bool is_functor(const OmegaCategory& dom, const OmegaCategory& cod, const ObjectMap& f) {
  return !functor_violation(dom, cod, f).has_value();
}

bool is_isometry(const OmegaCategory& dom, const OmegaCategory& cod, const ObjectMap& f) {
  for (Index x = 0; x < dom.size(); ++x)
    for (Index y = 0; y < dom.size(); ++y)
      if (dom.hom(x, y) != cod.hom(f[x], f[y])) return false;
  return true;
}

ObjectMap compose(const ObjectMap& g, const ObjectMap& f) {
  ObjectMap out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g.at(f[i]);
  return out;
}

ObjectMap identity_map(std::size_t n) {
  ObjectMap out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Index>(i);
  return out;
}

ObjectMap constant_map(std::size_t n, Index value) { return ObjectMap(n, value); }

CheckList check_adjunction(const OmegaCategory& a, const OmegaCategory& b, const Adjunction& adj) {
  CheckList out;
  auto fv = functor_violation(a, b, adj.left);
  out.record("left_is_functor", !fv, fv ? a.object(fv->first) + "," + a.object(fv->second) : "");
  auto gv = functor_violation(b, a, adj.right);
  out.record("right_is_functor", !gv, gv ? b.object(gv->first) + "," + b.object(gv->second) : "");
  std::string w;
  for (Index x = 0; x < a.size() && w.empty(); ++x)
    for (Index y = 0; y < b.size() && w.empty(); ++y)
      if (b.hom(adj.left[x], y) != a.hom(x, adj.right[y])) w = a.object(x) + "," + b.object(y);
  out.record("hom_equality", w.empty(), w);
  return out;
}

bool is_adjunction(const OmegaCategory& a, const OmegaCategory& b, const Adjunction& adj) {
  return check_adjunction(a, b, adj).all_ok();
}

namespace {

// Cartesian product of per-position candidate lists, in lexicographic order.
std::vector<ObjectMap> product_of_candidates(const std::vector<std::vector<Index>>& cands, const Budget& budget) {
  std::uint64_t total = 1;
  for (const auto& c : cands) {
    if (c.empty()) return {};
    total = total > budget.limit ? total : total * c.size();
  }
  if (total > budget.limit) throw_size_bound("adjoint search", total, budget);
  std::vector<ObjectMap> out;
  std::vector<std::size_t> digit(cands.size(), 0);
  for (std::uint64_t k = 0; k < total; ++k) {
    ObjectMap m(cands.size());
    for (std::size_t i = 0; i < cands.size(); ++i) m[i] = cands[i][digit[i]];
    out.push_back(std::move(m));
    for (std::size_t i = cands.size(); i-- > 0;) {
      if (++digit[i] < cands[i].size()) break;
      digit[i] = 0;
    }
  }
  return out;
}

}  // namespace

// The hom equality constrains each value of the adjoint independently, so the
// exhaustive search over all maps factors into one candidate list per object.
std::vector<ObjectMap> find_right_adjoints(const OmegaCategory& a, const OmegaCategory& b, const ObjectMap& f,
                                           const Budget& budget) {
  if (!is_functor(a, b, f)) return {};
  std::vector<std::vector<Index>> cands(b.size());
  for (Index y = 0; y < b.size(); ++y)
    for (Index c = 0; c < a.size(); ++c) {
      bool ok = true;
      for (Index x = 0; x < a.size() && ok; ++x) ok = a.hom(x, c) == b.hom(f[x], y);
      if (ok) cands[y].push_back(c);
    }
  std::vector<ObjectMap> out;
  for (auto& g : product_of_candidates(cands, budget))
    if (is_functor(b, a, g)) out.push_back(std::move(g));
  return out;
}

std::vector<ObjectMap> find_left_adjoints(const OmegaCategory& a, const OmegaCategory& b, const ObjectMap& g,
                                          const Budget& budget) {
  if (!is_functor(b, a, g)) return {};
  std::vector<std::vector<Index>> cands(a.size());
  for (Index x = 0; x < a.size(); ++x)
    for (Index c = 0; c < b.size(); ++c) {
      bool ok = true;
      for (Index y = 0; y < b.size() && ok; ++y) ok = b.hom(c, y) == a.hom(x, g[y]);
      if (ok) cands[x].push_back(c);
    }
  std::vector<ObjectMap> out;
  for (auto& f : product_of_candidates(cands, budget))
    if (is_functor(a, b, f)) out.push_back(std::move(f));
  return out;
}

CheckList adjunction_properties(const OmegaCategory& a, const OmegaCategory& b, const Adjunction& adj) {
  CheckList out;
  const auto& f = adj.left;
  const auto& g = adj.right;
  out.record("fgf_eq_f", compose(f, compose(g, f)) == f, map_name(b, compose(f, compose(g, f))));
  out.record("gfg_eq_g", compose(g, compose(f, g)) == g, map_name(a, compose(g, compose(f, g))));
  auto injective = [](const ObjectMap& m) {
    std::set<Index> s(m.begin(), m.end());
    return s.size() == m.size();
  };
  auto surjective = [](const ObjectMap& m, std::size_t n) {
    std::set<Index> s(m.begin(), m.end());
    return s.size() == n;
  };
  const bool f_inj = injective(f);
  const bool gf_id = compose(g, f) == identity_map(a.size());
  const bool g_surj = surjective(g, a.size());
  out.record("f_injective_iff_gf_id_iff_g_surjective", f_inj == gf_id && gf_id == g_surj,
             std::to_string(f_inj) + std::to_string(gf_id) + std::to_string(g_surj));
  out.record("injective_left_is_isometry", !f_inj || is_isometry(a, b, f), map_name(b, f));
  const bool f_surj = surjective(f, b.size());
  const bool fg_id = compose(f, g) == identity_map(b.size());
  const bool g_inj = injective(g);
  out.record("f_surjective_iff_fg_id_iff_g_injective", f_surj == fg_id && fg_id == g_inj,
             std::to_string(f_surj) + std::to_string(fg_id) + std::to_string(g_inj));
  out.record("injective_right_is_isometry", !g_inj || is_isometry(b, a, g), map_name(a, g));
  return out;
}

bool is_presheaf(const OmegaCategory& a, Variance v, std::span<const Elem> values) {
  const Quantale& q = a.omega();
  if (values.size() != a.size()) return false;
  for (Index x = 0; x < a.size(); ++x)
    for (Index y = 0; y < a.size(); ++y) {
      Elem h = v == Variance::Lower ? a.hom(y, x) : a.hom(x, y);
      if (!q.leq(q.tensor(values[x], h), values[y])) return false;
    }
  return true;
}

Presheaf yoneda(const OmegaCategory& a, Index x) {
  Presheaf p{Variance::Lower, std::vector<Elem>(a.size())};
  for (Index z = 0; z < a.size(); ++z) p.values[z] = a.hom(z, x);
  return p;
}

Presheaf coyoneda(const OmegaCategory& a, Index x) {
  Presheaf p{Variance::Upper, std::vector<Elem>(a.size())};
  for (Index z = 0; z < a.size(); ++z) p.values[z] = a.hom(x, z);
  return p;
}

std::vector<Elem> up_close(const OmegaCategory& a, std::span<const Elem> mu) {
  const Quantale& q = a.omega();
  std::vector<Elem> out(a.size(), q.bottom());
  for (Index x = 0; x < a.size(); ++x)
    for (Index y = 0; y < a.size(); ++y) out[x] = q.join(out[x], q.tensor(mu[y], a.hom(y, x)));
  return out;
}

std::vector<Elem> down_close(const OmegaCategory& a, std::span<const Elem> mu) {
  const Quantale& q = a.omega();
  std::vector<Elem> out(a.size(), q.bottom());
  for (Index x = 0; x < a.size(); ++x)
    for (Index y = 0; y < a.size(); ++y) out[x] = q.join(out[x], q.tensor(mu[y], a.hom(x, y)));
  return out;
}

Elem presheaf_hom(const Quantale& q, std::span<const Elem> phi1, std::span<const Elem> phi2) {
  Elem m = q.top();
  for (std::size_t x = 0; x < phi1.size(); ++x) m = q.meet(m, q.imp(phi1[x], phi2[x]));
  return m;
}

PresheafFamily::PresheafFamily(Variance v, std::size_t width, std::vector<Elem> data)
    : variance_(v), width_(width), count_(width == 0 ? 1 : data.size() / width), data_(std::move(data)) {}

std::optional<Index> PresheafFamily::index_of(std::span<const Elem> values) const {
  if (values.size() != width_) return std::nullopt;
  if (width_ == 0) return Index{0};
  std::size_t lo = 0, hi = count_;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto row = (*this)[mid];
    if (std::lexicographical_compare(row.begin(), row.end(), values.begin(), values.end()))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count_ && std::equal(values.begin(), values.end(), (*this)[lo].begin())) return static_cast<Index>(lo);
  return std::nullopt;
}

Index PresheafFamily::require(std::span<const Elem> values) const {
  if (auto i = index_of(values)) return *i;
  throw Error(ErrorKind::Internal, "value table is not in the presheaf family");
}

PresheafFamily enumerate_presheaves(const OmegaCategory& a, Variance v, const Budget& budget,
                                    kernels::ExecPolicy policy) {
  const Quantale& q = a.omega();
  const std::size_t n = a.size();
  // Lower presheaves are functors A^op -> (Omega, ->), upper ones A -> (Omega, ->).
  std::vector<Elem> dom_hom(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      dom_hom[x * n + y] = v == Variance::Lower ? a.hom(static_cast<Index>(y), static_cast<Index>(x))
                                                : a.hom(static_cast<Index>(x), static_cast<Index>(y));
  kernels::FunctorSearch search;
  search.dom_size = n;
  search.cod_size = q.size();
  search.dom_hom = dom_hom;
  search.cod_hom = q.residual_table();
  search.omega_leq = q.lattice().leq_table();
  search.omega_size = q.size();
  auto maps = kernels::enumerate_functors(search, policy, budget);
  std::vector<Elem> data(maps.data.begin(), maps.data.end());
  return PresheafFamily(v, n, std::move(data));
}

PresheafFamily all_functions(const OmegaCategory& a, const Budget& budget) {
  return enumerate_presheaves(discrete(a.quantale(), a.objects()), Variance::Lower, budget);
}

std::string presheaf_name(const Quantale& q, std::span<const Elem> values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + q.elem_name(values[i]);
  return s + ")";
}

OmegaCategory presheaf_category(const OmegaCategory& a, const PresheafFamily& family, std::string label) {
  const Quantale& q = a.omega();
  const std::size_t m = family.size();
  std::vector<std::string> names;
  std::vector<Elem> hom(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(presheaf_name(q, family[i]));
    for (std::size_t j = 0; j < m; ++j) hom[i * m + j] = presheaf_hom(q, family[i], family[j]);
  }
  if (label.empty())
    label = family.variance() == Variance::Lower ? "[" + a.label() + "^op,Omega]" : "[" + a.label() + ",Omega]";
  return OmegaCategory(a.quantale(), std::move(names), std::move(hom), std::move(label));
}

CheckList yoneda_check(const OmegaCategory& a, const Budget& budget) {
  CheckList out;
  const Quantale& q = a.omega();
  auto lower = enumerate_presheaves(a, Variance::Lower, budget);
  auto upper = enumerate_presheaves(a, Variance::Upper, budget);
  std::string w;
  for (Index x = 0; x < a.size() && w.empty(); ++x) {
    auto yx = yoneda(a, x);
    if (!is_presheaf(a, Variance::Lower, yx.values)) w = a.object(x);
    for (std::size_t k = 0; k < lower.size() && w.empty(); ++k)
      if (presheaf_hom(q, yx.values, lower[k]) != lower[k][x]) w = a.object(x) + "," + presheaf_name(q, lower[k]);
  }
  out.record("yoneda.lower", w.empty(), w);
  w.clear();
  for (Index x = 0; x < a.size() && w.empty(); ++x) {
    auto yx = coyoneda(a, x);
    if (!is_presheaf(a, Variance::Upper, yx.values)) w = a.object(x);
    for (std::size_t k = 0; k < upper.size() && w.empty(); ++k)
      if (presheaf_hom(q, yx.values, upper[k]) != upper[k][x]) w = a.object(x) + "," + presheaf_name(q, upper[k]);
  }
  out.record("yoneda.upper", w.empty(), w);
  w.clear();
  for (Index x = 0; x < a.size() && w.empty(); ++x)
    for (Index y = 0; y < a.size() && w.empty(); ++y) {
      if (presheaf_hom(q, yoneda(a, x).values, yoneda(a, y).values) != a.hom(x, y))
        w = "y:" + a.object(x) + "," + a.object(y);
      else if (presheaf_hom(q, coyoneda(a, y).values, coyoneda(a, x).values) != a.hom(x, y))
        w = "y':" + a.object(x) + "," + a.object(y);
    }
  out.record("yoneda.isometries", w.empty(), w);
  out.pass("yoneda.pairs", std::to_string(a.size() * (lower.size() + upper.size())));
  return out;
}

CheckList closure_check(const OmegaCategory& a, const Budget& budget) {
  CheckList out;
  const Quantale& q = a.omega();
  const std::size_t n = a.size();
  auto upper = enumerate_presheaves(a, Variance::Upper, budget);
  auto member = [&](const std::vector<Elem>& v) { return upper.index_of(v).has_value(); };
  std::string w;
  out.record("empty_join", member(std::vector<Elem>(n, q.bottom())), "0_A");
  out.record("empty_meet", member(std::vector<Elem>(n, q.top())), "1_A");
  std::string wj, wm;
  for (std::size_t i = 0; i < upper.size(); ++i)
    for (std::size_t j = i; j < upper.size(); ++j) {
      std::vector<Elem> jn(n), mt(n);
      for (std::size_t x = 0; x < n; ++x) {
        jn[x] = q.join(upper[i][x], upper[j][x]);
        mt[x] = q.meet(upper[i][x], upper[j][x]);
      }
      if (wj.empty() && !member(jn)) wj = presheaf_name(q, upper[i]) + "," + presheaf_name(q, upper[j]);
      if (wm.empty() && !member(mt)) wm = presheaf_name(q, upper[i]) + "," + presheaf_name(q, upper[j]);
    }
  out.record("binary_join", wj.empty(), wj);
  out.record("binary_meet", wm.empty(), wm);
  std::string wt, wr, wl, wd;
  for (std::size_t i = 0; i < upper.size(); ++i) {
    auto psi = upper[i];
    for (std::size_t al = 0; al < q.size(); ++al) {
      const Elem alpha = static_cast<Elem>(al);
      std::vector<Elem> t(n), r(n), l(n);
      for (std::size_t x = 0; x < n; ++x) {
        t[x] = q.tensor(alpha, psi[x]);
        r[x] = q.imp(alpha, psi[x]);
        l[x] = q.imp(psi[x], alpha);
      }
      const std::string tag = q.elem_name(alpha) + "," + presheaf_name(q, psi);
      if (wt.empty() && !member(t)) wt = tag;
      if (wr.empty() && !member(r)) wr = tag;
      if (wl.empty() && !is_presheaf(a, Variance::Lower, l)) wl = tag;
    }
    for (std::size_t x = 0; x < n && wd.empty(); ++x) {
      Elem m = q.top();
      for (std::size_t al = 0; al < q.size(); ++al) {
        const Elem alpha = static_cast<Elem>(al);
        m = q.meet(m, q.imp(q.imp(psi[x], alpha), alpha));
      }
      if (m != psi[x]) wd = presheaf_name(q, psi) + "@" + a.object(static_cast<Index>(x));
    }
  }
  out.record("tensor", wt.empty(), wt);
  out.record("residual", wr.empty(), wr);
  out.record("dual_is_lower", wl.empty(), wl);
  out.record("double_dualization", wd.empty(), wd);
  return out;
}

std::vector<Elem> pullback(const ObjectMap& f, std::span<const Elem> psi) {
  std::vector<Elem> out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = psi[f[x]];
  return out;
}

std::vector<Elem> image(const OmegaCategory& b, const ObjectMap& f, std::span<const Elem> phi) {
  const Quantale& q = b.omega();
  std::vector<Elem> out(b.size(), q.bottom());
  for (std::size_t x = 0; x < f.size(); ++x) out[f[x]] = q.join(out[f[x]], phi[x]);
  return out;
}

std::vector<Elem> left_kan(const OmegaCategory& a, const OmegaCategory& b, const ObjectMap& f,
                           std::span<const Elem> presheaf, Variance v) {
  const Quantale& q = b.omega();
  std::vector<Elem> out(b.size(), q.bottom());
  for (Index y = 0; y < b.size(); ++y)
    for (Index x = 0; x < a.size(); ++x) {
      Elem h = v == Variance::Upper ? b.hom(f[x], y) : b.hom(y, f[x]);
      out[y] = q.join(out[y], q.tensor(presheaf[x], h));
    }
  return out;
}

std::vector<Elem> right_kan(const OmegaCategory& a, const OmegaCategory& b, const ObjectMap& f,
                            std::span<const Elem> presheaf, Variance v) {
  const Quantale& q = b.omega();
  std::vector<Elem> out(b.size(), q.top());
  for (Index y = 0; y < b.size(); ++y)
    for (Index x = 0; x < a.size(); ++x) {
      Elem h = v == Variance::Upper ? b.hom(y, f[x]) : b.hom(f[x], y);
      out[y] = q.meet(out[y], q.imp(h, presheaf[x]));
    }
  return out;
}

CheckList kan_check(const OmegaCategory& a, const OmegaCategory& b, const ObjectMap& f, const Budget& budget) {
  CheckList out;
  const Quantale& q = a.omega();
  if (auto bad = functor_violation(a, b, f)) {
    out.fail("kan.functor", a.object(bad->first) + "," + a.object(bad->second));
    return out;
  }
  for (Variance v : {Variance::Upper, Variance::Lower}) {
    const std::string tag = v == Variance::Upper ? "upper" : "lower";
    auto pa = enumerate_presheaves(a, v, budget);
    auto pb = enumerate_presheaves(b, v, budget);
    std::string w_land, w_left, w_right, w_image;
    for (std::size_t i = 0; i < pa.size(); ++i) {
      auto l = left_kan(a, b, f, pa[i], v);
      auto r = right_kan(a, b, f, pa[i], v);
      if (w_land.empty() && (!pb.index_of(l) || !pb.index_of(r))) w_land = presheaf_name(q, pa[i]);
      auto img = image(b, f, pa[i]);
      auto closed = v == Variance::Lower ? down_close(b, img) : up_close(b, img);
      if (w_image.empty() && closed != l) w_image = presheaf_name(q, pa[i]);
      for (std::size_t j = 0; j < pb.size(); ++j) {
        auto back = pullback(f, pb[j]);
        if (w_left.empty() && presheaf_hom(q, l, pb[j]) != presheaf_hom(q, pa[i], back))
          w_left = presheaf_name(q, pa[i]) + "," + presheaf_name(q, pb[j]);
        if (w_right.empty() && presheaf_hom(q, back, pa[i]) != presheaf_hom(q, pb[j], r))
          w_right = presheaf_name(q, pa[i]) + "," + presheaf_name(q, pb[j]);
      }
    }
    std::string w_pull;
    for (std::size_t j = 0; j < pb.size() && w_pull.empty(); ++j)
      if (!pa.index_of(pullback(f, pb[j]))) w_pull = presheaf_name(q, pb[j]);
    out.record("kan." + tag + ".pullback_lands", w_pull.empty(), w_pull);
    out.record("kan." + tag + ".extensions_land", w_land.empty(), w_land);
    out.record("kan." + tag + ".left_adjoint", w_left.empty(), w_left);
    out.record("kan." + tag + ".right_adjoint", w_right.empty(), w_right);
    out.record("kan." + tag + ".left_is_closed_image", w_image.empty(), w_image);
  }
  return out;
}

}  // namespace oql
