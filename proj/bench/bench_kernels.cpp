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


#include <benchmark/benchmark.h>

#include "oql/cd.hpp"
#include "oql/kernels.hpp"
#include "oql/quantale.hpp"

using namespace oql;
using kernels::ExecPolicy;

namespace {

ExecPolicy policy_of(const benchmark::State& state) {
  return state.range(0) == 0 ? ExecPolicy::Reference : ExecPolicy::Parallel;
}

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "reference" : "parallel"); }

void BM_EndoFunctors(benchmark::State& state) {
  auto q = builtin("lukasiewicz:5");
  auto c = product(q, {canonical_omega(q), chain_category(q, 2)});
  auto omega = canonical_omega(q);
  kernels::FunctorSearch s;
  s.dom_size = c.size();
  s.cod_size = omega.size();
  s.dom_hom = c.hom_table();
  s.cod_hom = omega.hom_table();
  s.omega_leq = q->lattice().leq_table();
  s.omega_size = q->size();
  const auto policy = policy_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(kernels::enumerate_functors(s, policy, Budget{100'000'000}));
  label(state);
}
BENCHMARK(BM_EndoFunctors)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Quantales(benchmark::State& state) {
  auto lattice = FiniteLattice::chain(5);
  EnumerateOptions o;
  o.policy = policy_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_quantales(lattice, o));
  label(state);
}
BENCHMARK(BM_Quantales)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Presheaves(benchmark::State& state) {
  auto q = builtin("lukasiewicz:3");
  auto a = discrete(q, 2);
  auto lower = enumerate_presheaves(a, Variance::Lower);
  auto outer = presheaf_category(a, lower);
  const auto policy = policy_of(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_presheaves(outer, Variance::Lower, Budget{100'000'000}, policy));
  label(state);
}
BENCHMARK(BM_Presheaves)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// range(1): 0 all pairs, 1 meet-irreducibles
void BM_CdScan(benchmark::State& state) {
  auto q = builtin("lukasiewicz:3");
  auto a = discrete(q, 2);
  auto l = certify_complete(presheaf_category(a, enumerate_presheaves(a, Variance::Lower)));
  auto lower = enumerate_presheaves(l.cat(), Variance::Lower, Budget{100'000'000});
  const auto scan = state.range(1) == 0 ? MeetScan::AllPairs : MeetScan::Irreducibles;
  const auto policy = policy_of(state);
  for (auto _ : state) benchmark::DoNotOptimize(is_cd(l, lower, scan, policy));
  state.SetLabel(std::string(state.range(0) == 0 ? "reference" : "parallel") +
                 (scan == MeetScan::AllPairs ? "/all-pairs" : "/irreducibles"));
}
BENCHMARK(BM_CdScan)->Args({0, 0})->Args({1, 0})->Args({0, 1})->Args({1, 1})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
