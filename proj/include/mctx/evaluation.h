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

#ifndef MCTX_EVALUATION_H_
#define MCTX_EVALUATION_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mctx/annotation.h"
#include "mctx/extraction_io.h"
#include "mctx/labels.h"
#include "mctx/matcher.h"

namespace mctx {

struct ConfusionCounts {
  int tp = 0;
  int fp = 0;
  int fn = 0;

  ConfusionCounts &operator+=(const ConfusionCounts &other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }
  bool operator==(const ConfusionCounts &) const = default;
};

// Ratios in [0, 1]; absent where the denominator is zero.
struct Metrics {
  ConfusionCounts counts;
  std::optional<double> precision;
  std::optional<double> recall;
  std::optional<double> fscore;
};

Metrics ComputeMetrics(const ConfusionCounts &counts);

struct MetricsReport {
  std::map<std::string, Metrics> per_source;
  Metrics combined;

  // Percentages with one decimal place.
  std::string ToText() const;
  std::string ToJson() const;
};

// Surface strings an extracted word may match: its raw name and, when it
// has compound descriptors, the compound phrase in token order.
std::vector<std::string> MatchForms(const RelatedWord &word);

// Greedy one-to-one matching of labeled entities (in label order) against
// extracted words (in token order), case-insensitive. Descriptors are not
// scored.
ConfusionCounts ScoreSentence(const std::vector<RelatedWord> &extracted,
                              const std::vector<LabeledEntity> &labeled);

MetricsReport Aggregate(
    const std::vector<std::pair<std::string, ConfusionCounts>> &counts);

// Scores every labeled measurement against the extraction with the same
// (number, unit), pairing duplicates in textual order. Unmatched labels
// count as false negatives, extractions with no label as false positives.
// Sentences with no entry in `labels` are not scored.
std::vector<std::pair<std::string, ConfusionCounts>> ScoreCorpus(
    const std::vector<LabeledSentence> &labels,
    const std::vector<SentenceExtractions> &extractions);

// Fills Descriptor::relation from the sentence graph for records read back
// from JSON Lines.
void RestoreDescriptorRelations(SentenceExtractions &record,
                                const Sentence &sentence);

// Labels that reproduce `extractions` exactly: one measurement per
// extraction, one entity per related word.
std::vector<LabeledSentence> LabelsFromExtractions(
    const std::vector<SentenceExtractions> &extractions);

}  // namespace mctx

#endif  // MCTX_EVALUATION_H_
