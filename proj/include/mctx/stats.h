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

#ifndef MCTX_STATS_H_
#define MCTX_STATS_H_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mctx/extraction_io.h"
#include "mctx/units.h"

namespace mctx {

// Histogram over normalized quantities of one dimension. Bins are
// [k * bin_width, (k + 1) * bin_width) in base units.
struct HistogramSpec {
  std::string dimension;
  double bin_width = 1.0;
};

// Exactly one of `dimension` or `unit` must be given. With a unit, the
// dimension is the unit's and `bin_width` is read in that unit and
// converted to base units. Throws Error naming the known dimensions.
HistogramSpec ResolveHistogramSpec(const std::optional<std::string> &dimension,
                                   const std::optional<std::string> &unit,
                                   double bin_width,
                                   const UnitGazetteer &gazetteer);

// (bin lower bound, count), ascending, non-empty bins only.
std::vector<std::pair<double, int>> BuildHistogram(
    const std::vector<SentenceExtractions> &records,
    const HistogramSpec &spec);

// "bin,count" header followed by one row per bin.
std::string HistogramCsv(const std::vector<std::pair<double, int>> &bins);

}  // namespace mctx

#endif  // MCTX_STATS_H_
