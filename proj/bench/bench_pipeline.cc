// Copyright 2026 The mctx Authors.
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


// Serial vs. OpenMP extraction over the 500-sentence fixture corpus,
// replicated to the requested size.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <benchmark/benchmark.h>

#include "mctx/annotation.h"
#include "mctx/pipeline.h"

namespace {

const std::vector<mctx::Sentence> &Corpus() {
  static const std::vector<mctx::Sentence> corpus = [] {
    std::ifstream in(std::string(MCTX_TESTDATA_DIR) + "/corpus500.conllu");
    std::ostringstream text;
    text << in.rdbuf();
    return mctx::ParseConllu(std::string_view(text.str()));
  }();
  return corpus;
}

std::vector<mctx::Sentence> Replicate(size_t n) {
  const std::vector<mctx::Sentence> &base = Corpus();
  std::vector<mctx::Sentence> out;
  out.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    out.push_back(base[i % base.size()]);
    out.back().id = static_cast<int>(i) + 1;
  }
  return out;
}

void BM_Serial(benchmark::State &state) {
  const std::vector<mctx::Sentence> corpus = Replicate(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mctx::ExtractCorpusSerial(corpus, {}));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_Parallel(benchmark::State &state) {
  const std::vector<mctx::Sentence> corpus = Replicate(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mctx::ExtractCorpusParallel(corpus, {}, jobs));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ParseConllu(benchmark::State &state) {
  std::ifstream in(std::string(MCTX_TESTDATA_DIR) + "/corpus500.conllu");
  std::ostringstream text;
  text << in.rdbuf();
  const std::string data = text.str();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mctx::ParseConllu(std::string_view(data)));
  }
  state.SetBytesProcessed(state.iterations() * data.size());
}

BENCHMARK(BM_Serial)->Arg(500)->Arg(5000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)
    ->Args({500, 1})->Args({500, 2})->Args({500, 4})
    ->Args({5000, 1})->Args({5000, 2})->Args({5000, 4})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_ParseConllu)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
