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

#include "mctx/stats.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include "mctx/errors.h"

namespace mctx {

HistogramSpec ResolveHistogramSpec(const std::optional<std::string> &dimension,
                                   const std::optional<std::string> &unit,
                                   double bin_width,
                                   const UnitGazetteer &gazetteer) {
  if (dimension.has_value() == unit.has_value()) {
    throw Error("histogram needs exactly one of a dimension or a unit");
  }
  if (!(bin_width > 0) || !std::isfinite(bin_width)) {
    throw Error("bin width must be a positive number");
  }
  HistogramSpec spec;
  if (unit) {
    const NormalizedUnit *u = gazetteer.Find(*unit);
    if (u == nullptr) throw Error("unknown unit \"" + *unit + "\"");
    spec.dimension = u->type;
    spec.bin_width = bin_width * u->factor_to_base;
    return spec;
  }
  const std::vector<std::string> known = gazetteer.Dimensions();
  if (std::find(known.begin(), known.end(), *dimension) == known.end()) {
    std::string list;
    for (const std::string &name : known) {
      list += list.empty() ? name : ", " + name;
    }
    throw Error("unknown dimension \"" + *dimension + "\"; known: " + list);
  }
  spec.dimension = *dimension;
  spec.bin_width = bin_width;
  return spec;
}

std::vector<std::pair<double, int>> BuildHistogram(
    const std::vector<SentenceExtractions> &records,
    const HistogramSpec &spec) {
  // Slack absorbs representation error so 1900 nm and 1.9 um share a bin.
  constexpr double kSlack = 1e-9;
  std::map<long long, int> counts;
  for (const SentenceExtractions &record : records) {
    for (const Extraction &e : record.measurements) {
      if (e.normalized.unit.type != spec.dimension) continue;
      const double position = e.normalized.quantity / spec.bin_width;
      ++counts[static_cast<long long>(std::floor(position + kSlack))];
    }
  }
  std::vector<std::pair<double, int>> bins;
  bins.reserve(counts.size());
  for (const auto &[index, count] : counts) {
    bins.emplace_back(static_cast<double>(index) * spec.bin_width, count);
  }
  return bins;
}

std::string HistogramCsv(const std::vector<std::pair<double, int>> &bins) {
  std::string out = "bin,count\n";
  char row[64];
  for (const auto &[lower, count] : bins) {
    std::snprintf(row, sizeof(row), "%.15g,%d\n", lower, count);
    out += row;
  }
  return out;
}

}  // namespace mctx
