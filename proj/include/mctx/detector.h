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

#ifndef MCTX_DETECTOR_H_
#define MCTX_DETECTOR_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mctx/annotation.h"
#include "mctx/labels.h"
#include "mctx/units.h"

namespace mctx {

// Surface arrangement of value and unit: "10 m", "10m", "10-m".
enum class MeasurementFormat { kSpaceBetween, kAttached, kHyphenated };

inline constexpr MeasurementFormat kAllFormats[] = {
    MeasurementFormat::kSpaceBetween, MeasurementFormat::kAttached,
    MeasurementFormat::kHyphenated};

std::string_view FormatName(MeasurementFormat format);
std::optional<MeasurementFormat> FormatFromName(std::string_view name);

struct MeasurementSpan {
  TokenIndex value_token = 0;
  std::vector<TokenIndex> unit_tokens;  // contiguous, non-empty
  std::string raw_value;
  double parsed_value = 0;
  std::string raw_unit_name;
  MeasurementFormat format = MeasurementFormat::kSpaceBetween;
  int value_start = 0, value_end = 0;  // character offsets, end exclusive
  int unit_start = 0, unit_end = 0;

  bool IsMeasurementToken(TokenIndex index) const;

  bool operator==(const MeasurementSpan &) const = default;
};

struct NumberMatch {
  size_t length = 0;  // characters consumed
  double value = 0;
};

// Longest numeric prefix of `text`: optional sign, digits with optional ","
// thousands groups, optional fraction, optional exponent.
std::optional<NumberMatch> ScanNumber(std::string_view text);

// Classifies the characters between value and unit. Empty -> attached, "-"
// -> hyphenated, whitespace -> space_between, anything else -> nullopt.
std::optional<MeasurementFormat> ClassifyGap(std::string_view gap);

// Same, reading the gap out of sentence text. Requires value_end <=
// unit_start.
std::optional<MeasurementFormat> ClassifyFormat(std::string_view text,
                                                int value_end, int unit_start);

// Finds value/unit pairs in a sentence. Spans are non-overlapping, ordered
// by value token, and prefer the longest unit surface form.
std::vector<MeasurementSpan> DetectMeasurements(
    const Sentence &sentence, const UnitGazetteer &gazetteer);

// Builds spans from ground-truth labels instead of running the detector.
// Throws AlignmentError when a labeled number/unit pair is not in the text.
std::vector<MeasurementSpan> ApplyOverrideSpans(const Sentence &sentence,
                                                const LabeledSentence &labeled);

struct NormalizedQuantity {
  double quantity = 0;
  NormalizedUnit unit;
};

// Unknown units keep their raw name and value with system "unknown".
NormalizedQuantity Normalize(const MeasurementSpan &span,
                             const UnitGazetteer &gazetteer);
NormalizedQuantity Normalize(double value, std::string_view unit,
                             const UnitGazetteer &gazetteer);

}  // namespace mctx

#endif  // MCTX_DETECTOR_H_
