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

#include "mctx/units.h"

#include <algorithm>
#include <charconv>
#include <set>

#include "mctx/errors.h"

namespace mctx {

extern const char kDefaultUnitsTsv[];

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  for (size_t tab; (tab = line.find('\t', start)) != std::string_view::npos;
       start = tab + 1) {
    fields.push_back(line.substr(start, tab - start));
  }
  fields.push_back(line.substr(start));
  return fields;
}

double ParseDouble(int line, std::string_view field, const char *what) {
  double value = 0;
  auto [end, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || end != field.data() + field.size()) {
    throw ParseError(line, std::string("bad ") + what + ": " +
                               std::string(field));
  }
  return value;
}

}  // namespace

UnitGazetteer UnitGazetteer::Parse(std::string_view text) {
  UnitGazetteer gazetteer;
  int line_number = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t newline = text.find('\n', start);
    std::string_view line = text.substr(
        start, newline == std::string_view::npos ? std::string_view::npos
                                                 : newline - start);
    start = newline == std::string_view::npos ? text.size() : newline + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string_view> f = SplitTabs(line);
    if (f.size() != 6) {
      throw ParseError(line_number, "expected 6 tab-separated fields, found " +
                                        std::to_string(f.size()));
    }
    for (size_t i = 0; i < 4; ++i) {
      if (f[i].empty()) throw ParseError(line_number, "empty field");
    }
    NormalizedUnit unit;
    unit.name = std::string(f[1]);
    unit.type = std::string(f[2]);
    unit.system = std::string(f[3]);
    unit.factor_to_base = ParseDouble(line_number, f[4], "factor");
    unit.offset_to_base = ParseDouble(line_number, f[5], "offset");
    if (!(unit.factor_to_base > 0)) {
      throw ParseError(line_number, "factor must be positive");
    }
    if (gazetteer.Find(f[0]) != nullptr) {
      throw ParseError(line_number,
                       "duplicate surface form: " + std::string(f[0]));
    }
    gazetteer.Add(std::string(f[0]), std::move(unit));
  }
  return gazetteer;
}

const UnitGazetteer &UnitGazetteer::Default() {
  static const UnitGazetteer gazetteer = Parse(kDefaultUnitsTsv);
  return gazetteer;
}

void UnitGazetteer::Add(std::string surface, NormalizedUnit unit) {
  const int words =
      1 + static_cast<int>(std::count(surface.begin(), surface.end(), ' '));
  max_words_ = std::max(max_words_, words);
  entries_.insert_or_assign(std::move(surface), std::move(unit));
}

const NormalizedUnit *UnitGazetteer::Find(std::string_view surface) const {
  auto it = entries_.find(surface);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> UnitGazetteer::Dimensions() const {
  std::set<std::string> names;
  for (const auto &[surface, unit] : entries_) names.insert(unit.type);
  return {names.begin(), names.end()};
}

}  // namespace mctx
