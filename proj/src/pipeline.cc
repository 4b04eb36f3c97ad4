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

#include "mctx/pipeline.h"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "mctx/detector.h"
#include "mctx/graph.h"
#include "mctx/matcher.h"

namespace mctx {

SentenceResult ExtractSentence(const Sentence &sentence,
                               const ExtractOptions &options) {
  SentenceResult result;
  result.record.sentence_num = sentence.id;
  result.record.sentence = sentence.text;
  try {
    ValidateSentence(sentence);
    std::vector<MeasurementSpan> spans;
    if (options.override_labels != nullptr) {
      auto it = options.override_labels->find(sentence.id);
      if (it != options.override_labels->end()) {
        spans = ApplyOverrideSpans(sentence, it->second);
      }
    } else {
      spans = DetectMeasurements(sentence, *options.gazetteer);
    }
    if (spans.empty()) return result;

    const SentenceGraph graph(sentence);
    result.record.measurements.reserve(spans.size());
    for (const MeasurementSpan &span : spans) {
      result.record.measurements.push_back(ExtractContext(
          graph, sentence, span, *options.rules, *options.gazetteer));
    }
  } catch (const std::exception &e) {
    result.record.measurements.clear();
    result.error = e.what();
  }
  return result;
}

std::vector<SentenceResult> ExtractCorpusSerial(
    std::span<const Sentence> sentences, const ExtractOptions &options) {
  std::vector<SentenceResult> results;
  results.reserve(sentences.size());
  for (const Sentence &sentence : sentences) {
    results.push_back(ExtractSentence(sentence, options));
  }
  return results;
}

std::vector<SentenceResult> ExtractCorpusParallel(
    std::span<const Sentence> sentences, const ExtractOptions &options,
    int jobs) {
  std::vector<SentenceResult> results(sentences.size());
  const long n = static_cast<long>(sentences.size());
#ifdef _OPENMP
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
#else
  (void)jobs;
#endif
  for (long i = 0; i < n; ++i) {
    results[i] = ExtractSentence(sentences[i], options);
  }
  return results;
}

}  // namespace mctx
