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

#ifndef MCTX_UNITS_H_
#define MCTX_UNITS_H_

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mctx {

// A unit expressed in terms of its base unit:
//   base quantity = value * factor_to_base + offset_to_base
struct NormalizedUnit {
  std::string name;    // base symbol, e.g. "m", "kg", "K", "1"
  std::string type;    // dimension, e.g. "length", "fraction"
  std::string system;  // "SI base", "SI derived", "non SI" or "unknown"
  double factor_to_base = 1.0;
  double offset_to_base = 0.0;

  bool operator==(const NormalizedUnit &) const = default;
};

// Surface form -> unit table. Lookups are case sensitive.
//
// File format: UTF-8, one record per line, six TAB-separated fields:
//   surface  base-name  dimension  system  factor  offset
// Blank lines and lines starting with '#' are ignored. Surface forms may
// contain spaces ("degrees Celsius").
class UnitGazetteer {
 public:
  UnitGazetteer() = default;

  // Throws ParseError on malformed records or non-positive factors.
  static UnitGazetteer Parse(std::string_view text);

  // The table shipped in data/units.tsv.
  static const UnitGazetteer &Default();

  void Add(std::string surface, NormalizedUnit unit);

  const NormalizedUnit *Find(std::string_view surface) const;

  // Largest number of space-separated words in any surface form.
  int max_words() const { return max_words_; }

  size_t size() const { return entries_.size(); }

  // Sorted, unique dimension names.
  std::vector<std::string> Dimensions() const;

  const std::map<std::string, NormalizedUnit, std::less<>> &entries() const {
    return entries_;
  }

 private:
  std::map<std::string, NormalizedUnit, std::less<>> entries_;
  int max_words_ = 1;
};

}  // namespace mctx

#endif  // MCTX_UNITS_H_
