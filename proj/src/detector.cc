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

#include "mctx/detector.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>

#include "mctx/errors.h"

namespace mctx {
namespace {

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

// Token whose character range contains `offset`, or 0.
TokenIndex TokenAt(const Sentence &sentence, int offset) {
  auto it = std::upper_bound(
      sentence.tokens.begin(), sentence.tokens.end(), offset,
      [](int off, const Token &t) { return off < t.offset_start; });
  if (it == sentence.tokens.begin()) return 0;
  --it;
  return offset < it->offset_end ? it->index : 0;
}

}  // namespace

std::string_view FormatName(MeasurementFormat format) {
  switch (format) {
    case MeasurementFormat::kSpaceBetween:
      return "space_between";
    case MeasurementFormat::kAttached:
      return "attached";
    case MeasurementFormat::kHyphenated:
      return "hyphenated";
  }
  return "space_between";
}

std::optional<MeasurementFormat> FormatFromName(std::string_view name) {
  for (MeasurementFormat f : kAllFormats) {
    if (FormatName(f) == name) return f;
  }
  return std::nullopt;
}

bool MeasurementSpan::IsMeasurementToken(TokenIndex index) const {
  return index == value_token ||
         std::find(unit_tokens.begin(), unit_tokens.end(), index) !=
             unit_tokens.end();
}

std::optional<NumberMatch> ScanNumber(std::string_view s) {
  size_t p = 0;
  if (p < s.size() && (s[p] == '+' || s[p] == '-')) ++p;
  const size_t digits_start = p;
  while (p < s.size() && IsDigit(s[p])) ++p;
  const size_t int_digits = p - digits_start;
  if (int_digits == 0) return std::nullopt;

  if (int_digits <= 3) {
    while (p + 3 < s.size() && s[p] == ',' && IsDigit(s[p + 1]) &&
           IsDigit(s[p + 2]) && IsDigit(s[p + 3]) &&
           (p + 4 == s.size() || !IsDigit(s[p + 4]))) {
      p += 4;
    }
  }
  if (p + 1 < s.size() && s[p] == '.' && IsDigit(s[p + 1])) {
    p += 1;
    while (p < s.size() && IsDigit(s[p])) ++p;
  }
  if (p + 1 < s.size() && (s[p] == 'e' || s[p] == 'E')) {
    size_t q = p + 1;
    if (q < s.size() && (s[q] == '+' || s[q] == '-')) ++q;
    if (q < s.size() && IsDigit(s[q])) {
      while (q < s.size() && IsDigit(s[q])) ++q;
      p = q;
    }
  }

  std::string plain;
  plain.reserve(p);
  for (size_t i = (s[0] == '+' ? 1 : 0); i < p; ++i) {
    if (s[i] != ',') plain.push_back(s[i]);
  }
  NumberMatch match;
  match.length = p;
  auto [end, ec] =
      std::from_chars(plain.data(), plain.data() + plain.size(), match.value);
  if (ec != std::errc() || end != plain.data() + plain.size()) {
    return std::nullopt;
  }
  return match;
}

std::optional<MeasurementFormat> ClassifyGap(std::string_view gap) {
  if (gap.empty()) return MeasurementFormat::kAttached;
  if (gap == "-") return MeasurementFormat::kHyphenated;
  if (std::all_of(gap.begin(), gap.end(), IsSpace)) {
    return MeasurementFormat::kSpaceBetween;
  }
  return std::nullopt;
}

std::optional<MeasurementFormat> ClassifyFormat(std::string_view text,
                                                int value_end, int unit_start) {
  if (value_end > unit_start || unit_start > static_cast<int>(text.size())) {
    return std::nullopt;
  }
  return ClassifyGap(text.substr(value_end, unit_start - value_end));
}

std::vector<MeasurementSpan> DetectMeasurements(
    const Sentence &sentence, const UnitGazetteer &gazetteer) {
  std::vector<MeasurementSpan> spans;
  const int n = sentence.size();
  const std::string &text = sentence.text;

  for (int i = 1; i <= n; ++i) {
    const Token &token = sentence.token(i);
    std::optional<NumberMatch> number = ScanNumber(token.text);
    if (!number) continue;

    MeasurementSpan span;
    span.value_token = i;
    span.raw_value = token.text.substr(0, number->length);
    span.parsed_value = number->value;
    span.value_start = token.offset_start;
    span.value_end = token.offset_start + static_cast<int>(number->length);

    if (number->length < token.text.size()) {
      // Unit in the same token: "10m", "10%", "10-m".
      std::string_view suffix =
          std::string_view(token.text).substr(number->length);
      int skip = 0;
      if (gazetteer.Find(suffix) == nullptr) {
        if (suffix.size() < 2 || suffix.front() != '-' ||
            gazetteer.Find(suffix.substr(1)) == nullptr) {
          continue;
        }
        skip = 1;
      }
      span.unit_tokens = {i};
      span.raw_unit_name = std::string(suffix.substr(skip));
      span.unit_start = span.value_end + skip;
      span.unit_end = token.offset_end;
    } else {
      // Unit in following token(s), possibly after a lone "-" token.
      std::vector<int> starts = {i + 1};
      if (i + 2 <= n && sentence.token(i + 1).text == "-") {
        starts.push_back(i + 2);
      }
      bool found = false;
      for (int j : starts) {
        if (j > n) continue;
        const int max_k = std::min(gazetteer.max_words(), n - j + 1);
        for (int k = max_k; k >= 1 && !found; --k) {
          const int start = sentence.token(j).offset_start;
          const int end = sentence.token(j + k - 1).offset_end;
          std::string_view surface =
              std::string_view(text).substr(start, end - start);
          if (gazetteer.Find(surface) == nullptr) continue;
          span.unit_tokens.clear();
          for (int t = j; t < j + k; ++t) span.unit_tokens.push_back(t);
          span.raw_unit_name = std::string(surface);
          span.unit_start = start;
          span.unit_end = end;
          found = true;
        }
        if (found) break;
      }
      if (!found) continue;
    }

    std::optional<MeasurementFormat> format =
        ClassifyFormat(text, span.value_end, span.unit_start);
    if (!format) continue;
    span.format = *format;
    const int last = span.unit_tokens.back();
    spans.push_back(std::move(span));
    i = last;
  }
  return spans;
}

std::vector<MeasurementSpan> ApplyOverrideSpans(
    const Sentence &sentence, const LabeledSentence &labeled) {
  const std::string &text = sentence.text;
  const int id = labeled.sentence_num;
  std::vector<bool> consumed(text.size(), false);
  std::vector<MeasurementSpan> spans;

  for (const LabeledMeasurement &m : labeled.measurements) {
    if (m.number.empty() || m.unit.empty()) {
      throw AlignmentError(id, "measurement needs both number and unit");
    }
    std::optional<NumberMatch> number = ScanNumber(m.number);
    if (!number || number->length != m.number.size()) {
      throw AlignmentError(id, "labeled number \"" + m.number +
                                   "\" is not numeric");
    }

    bool placed = false;
    for (size_t pos = text.find(m.number); pos != std::string::npos && !placed;
         pos = text.find(m.number, pos + 1)) {
      const int value_start = static_cast<int>(pos);
      const int value_end = value_start + static_cast<int>(m.number.size());
      const TokenIndex value_token = TokenAt(sentence, value_start);
      if (value_token == 0 ||
          sentence.token(value_token).offset_start != value_start) {
        continue;
      }

      // Candidate gaps: none, "-", or a whitespace run.
      size_t ws = value_end;
      while (ws < text.size() && IsSpace(text[ws])) ++ws;
      std::vector<int> unit_starts = {value_end, value_end + 1};
      if (ws > static_cast<size_t>(value_end)) {
        unit_starts.push_back(static_cast<int>(ws));
      }
      for (int unit_start : unit_starts) {
        const int unit_end = unit_start + static_cast<int>(m.unit.size());
        if (unit_end > static_cast<int>(text.size()) ||
            text.compare(unit_start, m.unit.size(), m.unit) != 0) {
          continue;
        }
        std::optional<MeasurementFormat> format =
            ClassifyFormat(text, value_end, unit_start);
        if (!format) continue;
        const TokenIndex first_unit = TokenAt(sentence, unit_start);
        const TokenIndex last_unit = TokenAt(sentence, unit_end - 1);
        if (first_unit == 0 || last_unit == 0 ||
            sentence.token(last_unit).offset_end != unit_end) {
          continue;
        }
        if (std::any_of(consumed.begin() + value_start,
                        consumed.begin() + unit_end,
                        [](bool c) { return c; })) {
          continue;
        }

        MeasurementSpan span;
        span.value_token = value_token;
        for (TokenIndex t = first_unit; t <= last_unit; ++t) {
          span.unit_tokens.push_back(t);
        }
        span.raw_value = m.number;
        span.parsed_value = number->value;
        span.raw_unit_name = m.unit;
        span.format = *format;
        span.value_start = value_start;
        span.value_end = value_end;
        span.unit_start = unit_start;
        span.unit_end = unit_end;
        std::fill(consumed.begin() + value_start, consumed.begin() + unit_end,
                  true);
        spans.push_back(std::move(span));
        placed = true;
        break;
      }
    }
    if (!placed) {
      throw AlignmentError(id, "cannot locate \"" + m.number + "\" + \"" +
                                   m.unit + "\" in sentence text");
    }
  }
  return spans;
}

NormalizedQuantity Normalize(double value, std::string_view unit,
                             const UnitGazetteer &gazetteer) {
  NormalizedQuantity result;
  if (const NormalizedUnit *u = gazetteer.Find(unit)) {
    result.unit = *u;
    // Sub-unit factors such as 1e-9 are not exact in binary; dividing by
    // the exact reciprocal keeps 82 % == 0.82 and 1900 nm == 1.9 um.
    const double reciprocal = std::round(1.0 / u->factor_to_base);
    const double scaled =
        u->factor_to_base < 1 &&
                std::abs(1.0 / u->factor_to_base - reciprocal) <=
                    1e-9 * reciprocal
            ? value / reciprocal
            : value * u->factor_to_base;
    result.quantity = scaled + u->offset_to_base;
  } else {
    result.unit.name = std::string(unit);
    result.unit.type = "unknown";
    result.unit.system = "unknown";
    result.quantity = value;
  }
  return result;
}

NormalizedQuantity Normalize(const MeasurementSpan &span,
                             const UnitGazetteer &gazetteer) {
  return Normalize(span.parsed_value, span.raw_unit_name, gazetteer);
}

}  // namespace mctx
