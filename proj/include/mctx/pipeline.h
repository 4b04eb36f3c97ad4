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

#ifndef MCTX_PIPELINE_H_
#define MCTX_PIPELINE_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mctx/annotation.h"
#include "mctx/extraction_io.h"
#include "mctx/labels.h"
#include "mctx/rules.h"
#include "mctx/units.h"

namespace mctx {

struct ExtractOptions {
  const RuleSet *rules = &RuleSet::Default();
  const UnitGazetteer *gazetteer = &UnitGazetteer::Default();
  // When set, spans come from these labels (keyed by sentence_num) and the
  // detector is not run. Sentences without labels yield no measurements.
  const std::map<int, LabeledSentence> *override_labels = nullptr;
};

struct SentenceResult {
  SentenceExtractions record;
  std::string error;  // non-empty when the sentence failed

  bool ok() const { return error.empty(); }
};

// Validate, build graph, find spans, match context. Never throws; failures
// are reported in SentenceResult::error.
SentenceResult ExtractSentence(const Sentence &sentence,
                               const ExtractOptions &options);

// Reference implementation: one sentence after another.
std::vector<SentenceResult> ExtractCorpusSerial(
    std::span<const Sentence> sentences, const ExtractOptions &options);

// OpenMP over sentences. Results are in input order and identical to
// ExtractCorpusSerial. jobs <= 0 uses the OpenMP default.
std::vector<SentenceResult> ExtractCorpusParallel(
    std::span<const Sentence> sentences, const ExtractOptions &options,
    int jobs = 0);

}  // namespace mctx

#endif  // MCTX_PIPELINE_H_
