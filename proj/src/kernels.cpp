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


#include "oql/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace oql::kernels {

namespace {

constexpr Index kUnassigned = static_cast<Index>(-1);
constexpr std::size_t kPrefixTarget = 64;
constexpr std::uint64_t kFlushEvery = 1024;

// Shared node counter; threads flush in batches so the hot loop stays local.
class NodeCounter {
 public:
  explicit NodeCounter(std::uint64_t limit) : limit_(limit) {}

  bool add(std::uint64_t& local) {
    if (local >= kFlushEvery) return flush(local);
    return !aborted_.load(std::memory_order_relaxed);
  }
  bool flush(std::uint64_t& local) {
    std::uint64_t total = total_.fetch_add(local, std::memory_order_relaxed) + local;
    local = 0;
    if (total > limit_) aborted_.store(true, std::memory_order_relaxed);
    return !aborted_.load(std::memory_order_relaxed);
  }
  bool aborted() const { return aborted_.load() || total_.load() > limit_; }
  std::uint64_t total() const { return total_.load(); }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> total_{0};
  std::atomic<bool> aborted_{false};
};

class ExceptionSlot {
 public:
  void capture() {
    std::lock_guard lock(mu_);
    if (!ptr_) ptr_ = std::current_exception();
  }
  void rethrow() const {
    if (ptr_) std::rethrow_exception(ptr_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr ptr_;
};

// ---------------------------------------------------------------------------
// Functor enumeration

struct FunctorProblem {
  const FunctorSearch& s;
  std::vector<std::vector<Index>> candidates;

  explicit FunctorProblem(const FunctorSearch& search) : s(search), candidates(search.dom_size) {
    const bool restricted = s.allowed.size() == s.dom_size;
    for (std::size_t i = 0; i < s.dom_size; ++i) {
      if (restricted) {
        candidates[i] = s.allowed[i];
      } else {
        candidates[i].resize(s.cod_size);
        for (std::size_t v = 0; v < s.cod_size; ++v) candidates[i][v] = static_cast<Index>(v);
      }
    }
  }

  bool le(Elem a, Elem b) const { return s.omega_leq[a * s.omega_size + b] != 0; }
  Elem dom(std::size_t a, std::size_t b) const { return s.dom_hom[a * s.dom_size + b]; }
  Elem cod(Index a, Index b) const { return s.cod_hom[static_cast<std::size_t>(a) * s.cod_size + b]; }

  // Consistency of f(i) = v against already assigned positions 0..i-1.
  bool consistent(const std::vector<Index>& f, std::size_t i, Index v) const {
    if (!le(dom(i, i), cod(v, v))) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (!le(dom(i, j), cod(v, f[j]))) return false;
      if (!le(dom(j, i), cod(f[j], v))) return false;
    }
    return true;
  }

  bool full_check(const std::vector<Index>& f) const {
    for (std::size_t a = 0; a < s.dom_size; ++a)
      for (std::size_t b = 0; b < s.dom_size; ++b)
        if (!le(dom(a, b), cod(f[a], f[b]))) return false;
    return true;
  }

  void extend(std::vector<Index>& f, std::size_t depth, std::vector<Index>& out, NodeCounter& counter,
              std::uint64_t& local) const {
    if (depth == s.dom_size) {
      out.insert(out.end(), f.begin(), f.end());
      return;
    }
    for (Index v : candidates[depth]) {
      ++local;
      if (!counter.add(local)) return;
      if (!consistent(f, depth, v)) continue;
      f[depth] = v;
      extend(f, depth + 1, out, counter, local);
      f[depth] = kUnassigned;
    }
  }
};

MapList functors_reference(const FunctorSearch& search, const Budget& budget) {
  FunctorProblem p(search);
  const std::size_t n = search.dom_size;
  std::uint64_t total = 1;
  for (const auto& c : p.candidates) {
    total = c.empty() ? 0 : (total > budget.limit ? total : total * c.size());
    if (total == 0) break;
  }
  if (total > budget.limit) throw_size_bound("functor enumeration", total, budget);
  MapList out{n, 0, {}};
  if (total == 0) return out;
  if (n == 0) return {0, 1, {}};
  std::vector<std::size_t> digit(n, 0);
  std::vector<Index> f(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) f[i] = p.candidates[i][digit[i]];
    if (p.full_check(f)) {
      out.data.insert(out.data.end(), f.begin(), f.end());
      ++out.count;
    }
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++digit[pos] < p.candidates[pos].size()) break;
      digit[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

MapList functors_parallel(const FunctorSearch& search, const Budget& budget) {
  FunctorProblem p(search);
  const std::size_t n = search.dom_size;
  if (n == 0) return {0, 1, {}};
  NodeCounter counter(budget.limit);

  // Breadth-first prefix expansion up to a fixed target; independent of the
  // thread count so the work split is reproducible.
  std::vector<std::vector<Index>> prefixes{std::vector<Index>(n, kUnassigned)};
  std::size_t depth = 0;
  std::uint64_t local = 0;
  while (depth < n && prefixes.size() < kPrefixTarget) {
    std::vector<std::vector<Index>> next;
    for (auto& f : prefixes) {
      for (Index v : p.candidates[depth]) {
        ++local;
        if (!p.consistent(f, depth, v)) continue;
        auto g = f;
        g[depth] = v;
        next.push_back(std::move(g));
      }
    }
    prefixes = std::move(next);
    ++depth;
    if (!counter.flush(local)) throw_size_bound("functor enumeration", counter.total(), budget);
  }

  std::vector<std::vector<Index>> parts(prefixes.size());
  ExceptionSlot error;
  const long count = static_cast<long>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < count; ++k) {
    try {
      std::uint64_t mine = 0;
      auto f = prefixes[static_cast<std::size_t>(k)];
      p.extend(f, depth, parts[static_cast<std::size_t>(k)], counter, mine);
      counter.flush(mine);
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  if (counter.aborted()) throw_size_bound("functor enumeration", counter.total(), budget);

  MapList out{n, 0, {}};
  for (auto& part : parts) out.data.insert(out.data.end(), part.begin(), part.end());
  out.count = out.data.size() / n;
  return out;
}

// ---------------------------------------------------------------------------
// Tensor table enumeration

constexpr Elem kFree = 0xFF;

struct TensorProblem {
  const TensorSearch& s;
  std::size_t n;

  explicit TensorProblem(const TensorSearch& search) : s(search), n(search.size) {}

  bool le(Elem a, Elem b) const { return s.leq[a * n + b] != 0; }

  // Table with the unit row and the absorbing bottom row filled in; the
  // returned cell list is the row-major upper triangle of the free cells.
  std::vector<std::pair<Elem, Elem>> seed(Elem unit, std::vector<Elem>& t) const {
    t.assign(n * n, kFree);
    for (std::size_t x = 0; x < n; ++x) {
      t[unit * n + x] = static_cast<Elem>(x);
      t[x * n + unit] = static_cast<Elem>(x);
    }
    for (std::size_t x = 0; x < n; ++x) {
      t[s.bottom * n + x] = s.bottom;
      t[x * n + s.bottom] = s.bottom;
    }
    std::vector<std::pair<Elem, Elem>> cells;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        if (t[i * n + j] == kFree) cells.emplace_back(static_cast<Elem>(i), static_cast<Elem>(j));
    return cells;
  }

  bool seed_ok(Elem unit, const std::vector<Elem>& t) const {
    // unit and bottom rows must agree where they meet
    return t[unit * n + s.bottom] == s.bottom;
  }

  // Monotonicity of cell (i,j) = v against every assigned cell in row i and column j.
  bool consistent(const std::vector<Elem>& t, Elem i, Elem j, Elem v) const {
    for (std::size_t k = 0; k < n; ++k) {
      Elem a = t[k * n + j];
      if (a != kFree && k != i) {
        if (le(i, static_cast<Elem>(k)) && !le(v, a)) return false;
        if (le(static_cast<Elem>(k), i) && !le(a, v)) return false;
      }
      Elem b = t[i * n + k];
      if (b != kFree && k != j) {
        if (le(j, static_cast<Elem>(k)) && !le(v, b)) return false;
        if (le(static_cast<Elem>(k), j) && !le(b, v)) return false;
      }
    }
    return true;
  }

  bool monotone(const std::vector<Elem>& t) const {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (le(static_cast<Elem>(a), static_cast<Elem>(b)))
          for (std::size_t c = 0; c < n; ++c)
            if (!le(t[a * n + c], t[b * n + c])) return false;
    return true;
  }

  void extend(TensorTable& cand, const std::vector<std::pair<Elem, Elem>>& cells, std::size_t depth,
              std::vector<TensorTable>& out, NodeCounter& counter, std::uint64_t& local) const {
    if (depth == cells.size()) {
      if (s.accept(cand)) out.push_back(cand);
      return;
    }
    auto [i, j] = cells[depth];
    for (std::size_t v = 0; v < n; ++v) {
      ++local;
      if (!counter.add(local)) return;
      if (!consistent(cand.table, i, j, static_cast<Elem>(v))) continue;
      cand.table[i * n + j] = static_cast<Elem>(v);
      cand.table[j * n + i] = static_cast<Elem>(v);
      extend(cand, cells, depth + 1, out, counter, local);
      cand.table[i * n + j] = kFree;
      cand.table[j * n + i] = kFree;
    }
  }
};

std::vector<TensorTable> tensors_reference(const TensorSearch& search, const Budget& budget, std::size_t shard,
                                           std::size_t shards) {
  TensorProblem p(search);
  const std::size_t n = search.size;
  std::vector<TensorTable> out;
  std::uint64_t index = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (n > 1 && u == search.bottom) continue;
    TensorTable cand{static_cast<Elem>(u), {}};
    auto cells = p.seed(cand.unit, cand.table);
    if (!p.seed_ok(cand.unit, cand.table)) continue;
    std::uint64_t total = saturating_pow(n, cells.size());
    if (total > budget.limit) throw_size_bound("tensor enumeration", total, budget);
    std::vector<std::size_t> digit(cells.size(), 0);
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        auto [i, j] = cells[c];
        cand.table[i * n + j] = cand.table[j * n + i] = static_cast<Elem>(digit[c]);
      }
      if (index++ % shards == shard && p.monotone(cand.table) && search.accept(cand)) out.push_back(cand);
      std::size_t pos = cells.size();
      bool done = cells.empty();
      while (pos > 0) {
        --pos;
        if (++digit[pos] < n) break;
        digit[pos] = 0;
        if (pos == 0) done = true;
      }
      if (done) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TensorTable> tensors_parallel(const TensorSearch& search, const Budget& budget, std::size_t shard,
                                          std::size_t shards) {
  TensorProblem p(search);
  const std::size_t n = search.size;
  NodeCounter counter(budget.limit);

  struct Prefix {
    TensorTable cand;
    const std::vector<std::pair<Elem, Elem>>* cells;
    std::size_t depth;
  };
  std::vector<std::vector<std::pair<Elem, Elem>>> cell_lists(n);
  std::vector<Prefix> prefixes;
  std::uint64_t local = 0;
  for (std::size_t u = 0; u < n; ++u) {
    if (n > 1 && u == search.bottom) continue;
    TensorTable cand{static_cast<Elem>(u), {}};
    cell_lists[u] = p.seed(cand.unit, cand.table);
    if (!p.seed_ok(cand.unit, cand.table)) continue;
    std::vector<Prefix> level{{cand, &cell_lists[u], 0}};
    // Expand each unit's search tree to a fixed prefix count.
    while (level.size() < kPrefixTarget / 4 && level.front().depth < cell_lists[u].size()) {
      std::vector<Prefix> next;
      for (auto& pre : level) {
        auto [i, j] = (*pre.cells)[pre.depth];
        for (std::size_t v = 0; v < n; ++v) {
          ++local;
          if (!p.consistent(pre.cand.table, i, j, static_cast<Elem>(v))) continue;
          Prefix q = pre;
          q.cand.table[i * n + j] = q.cand.table[j * n + i] = static_cast<Elem>(v);
          q.depth++;
          next.push_back(std::move(q));
        }
      }
      level = std::move(next);
      if (level.empty()) break;
    }
    for (auto& pre : level) prefixes.push_back(std::move(pre));
  }
  if (!counter.flush(local)) throw_size_bound("tensor enumeration", counter.total(), budget);

  std::vector<std::vector<TensorTable>> parts(prefixes.size());
  ExceptionSlot error;
  const long count = static_cast<long>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 0; k < count; ++k) {
    if (static_cast<std::size_t>(k) % shards != shard) continue;
    try {
      std::uint64_t mine = 0;
      Prefix pre = prefixes[static_cast<std::size_t>(k)];
      p.extend(pre.cand, *pre.cells, pre.depth, parts[static_cast<std::size_t>(k)], counter, mine);
      counter.flush(mine);
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  if (counter.aborted()) throw_size_bound("tensor enumeration", counter.total(), budget);
  std::vector<TensorTable> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

MapList enumerate_functors(const FunctorSearch& search, ExecPolicy policy, const Budget& budget) {
  if (policy == ExecPolicy::Reference) return functors_reference(search, budget);
  return functors_parallel(search, budget);
}

std::vector<TensorTable> enumerate_tensors(const TensorSearch& search, ExecPolicy policy, const Budget& budget,
                                           std::size_t shard, std::size_t shards) {
  if (shards == 0 || shard >= shards) throw Error(ErrorKind::InvalidArgument, "bad shard index");
  if (search.size == 0) return {};
  if (policy == ExecPolicy::Reference) return tensors_reference(search, budget, shard, shards);
  return tensors_parallel(search, budget, shard, shards);
}

std::size_t first_failure(std::size_t n, const std::function<bool(std::size_t)>& pred, ExecPolicy policy) {
  if (policy == ExecPolicy::Reference) {
    for (std::size_t i = 0; i < n; ++i)
      if (!pred(i)) return i;
    return n;
  }
  std::atomic<std::size_t> best{n};
  ExceptionSlot error;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (long k = 0; k < count; ++k) {
    const auto i = static_cast<std::size_t>(k);
    if (i >= best.load(std::memory_order_relaxed)) continue;
    try {
      if (!pred(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    } catch (...) {
      error.capture();
    }
  }
  error.rethrow();
  return best.load();
}

int thread_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace oql::kernels
