// Copyright 2026 The dbsyn Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "dbsyn/gen.h"
#include "dbsyn/model.h"

namespace {

using dbsyn::Execution;

void run_monad_laws(benchmark::State& state, Execution exec) {
  const dbsyn::BindingSignature sig = dbsyn::lambda_signature();
  const auto model = dbsyn::term_model(sig);
  const auto sampler = dbsyn::term_sampler(sig);
  dbsyn::LawConfig cfg;
  cfg.cases = static_cast<std::size_t>(state.range(0));
  cfg.seed = 42;
  cfg.exec = exec;
  for (auto _ : state) {
    auto report = dbsyn::check_monad_laws(model.monad, sampler, cfg);
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void run_binding_laws(benchmark::State& state, Execution exec) {
  const dbsyn::BindingSignature sig = dbsyn::lambda_signature();
  const auto model = dbsyn::term_model(sig);
  const auto sampler = dbsyn::term_sampler(sig);
  dbsyn::LawConfig cfg;
  cfg.cases = static_cast<std::size_t>(state.range(0));
  cfg.seed = 42;
  cfg.exec = exec;
  for (auto _ : state) {
    auto report = dbsyn::check_binding_conditions(model, sig, sampler, cfg);
    benchmark::DoNotOptimize(report);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_MonadLawsSerial(benchmark::State& s) { run_monad_laws(s, Execution::kSerial); }
void BM_MonadLawsParallel(benchmark::State& s) { run_monad_laws(s, Execution::kParallel); }
void BM_BindingLawsSerial(benchmark::State& s) { run_binding_laws(s, Execution::kSerial); }
void BM_BindingLawsParallel(benchmark::State& s) { run_binding_laws(s, Execution::kParallel); }

BENCHMARK(BM_MonadLawsSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonadLawsParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BindingLawsSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BindingLawsParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
