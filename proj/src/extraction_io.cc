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

#include "mctx/extraction_io.h"

#include <cmath>
#include <cstdint>

#include "mctx/errors.h"

namespace mctx {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json Number(double value) {
  constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53
  if (std::isfinite(value) && value == std::trunc(value) &&
      std::abs(value) < kExactIntegerLimit) {
    return static_cast<std::int64_t>(value);
  }
  return value;
}

ordered_json DescriptorsToJson(const std::vector<Descriptor> &descriptors) {
  ordered_json out = ordered_json::array();
  for (const Descriptor &d : descriptors) {
    out.push_back({{"rawName", d.raw_name},
                   {"tokenIndex", std::to_string(d.token_index)}});
  }
  return out;
}

template <typename T>
T Get(const json &object, const char *name, const std::string &where) {
  auto it = object.find(name);
  if (it == object.end()) {
    throw SchemaError(where + ": missing field '" + name + "'");
  }
  try {
    return it->get<T>();
  } catch (const json::exception &) {
    throw SchemaError(where + ": field '" + name + "' has the wrong type");
  }
}

int IndexFromString(const json &value, const std::string &where) {
  if (value.is_number_integer()) return value.get<int>();
  if (value.is_string()) {
    try {
      return std::stoi(value.get<std::string>());
    } catch (const std::exception &) {
    }
  }
  throw SchemaError(where + ": token index must be an integer string");
}

std::vector<Descriptor> ReadDescriptors(const json &list,
                                        const std::string &where) {
  std::vector<Descriptor> out;
  if (!list.is_array()) throw SchemaError(where + ": descriptors not an array");
  for (const json &d : list) {
    out.push_back(Descriptor{Get<std::string>(d, "rawName", where),
                             IndexFromString(d.at("tokenIndex"), where), ""});
  }
  return out;
}

Extraction ReadExtraction(const json &m, const std::string &where) {
  Extraction e;
  const json &q = m.at("quantity");
  const json &unit = q.at("rawUnit");
  const json &norm = q.at("normalizedUnit");
  e.span.raw_value = Get<std::string>(q, "rawValue", where);
  e.span.parsed_value = Get<double>(q, "parsedValue", where);
  e.span.value_token = Get<int>(q, "tokenIndex", where);
  e.span.value_start = Get<int>(q, "offsetStart", where);
  e.span.value_end = Get<int>(q, "offsetEnd", where);
  e.span.raw_unit_name = Get<std::string>(unit, "name", where);
  e.span.unit_start = Get<int>(unit, "offsetStart", where);
  e.span.unit_end = Get<int>(unit, "offsetEnd", where);
  for (const json &t : unit.at("tokenIndices")) {
    e.span.unit_tokens.push_back(IndexFromString(t, where));
  }
  e.normalized.quantity = Get<double>(q, "normalizedQuantity", where);
  e.normalized.unit.type = Get<std::string>(norm, "type", where);
  e.normalized.unit.name = Get<std::string>(norm, "name", where);
  e.normalized.unit.system = Get<std::string>(norm, "system", where);
  if (auto it = q.find("descriptors"); it != q.end()) {
    e.modifiers = ReadDescriptors(*it, where);
  }
  for (const json &r : m.at("related")) {
    RelatedWord word;
    word.raw_name = Get<std::string>(r, "rawName", where);
    word.connector = Get<std::string>(r, "connector", where);
    word.offset_start = Get<int>(r, "offsetStart", where);
    word.offset_end = Get<int>(r, "offsetEnd", where);
    word.relation_form = Get<std::string>(r, "relationForm", where);
    word.token_index = Get<int>(r, "tokenIndex", where);
    word.descriptors = ReadDescriptors(r.at("descriptors"), where);
    e.related.push_back(std::move(word));
  }
  return e;
}

}  // namespace

ordered_json ExtractionToJson(const Extraction &e) {
  const MeasurementSpan &s = e.span;
  ordered_json unit_indices = ordered_json::array();
  for (TokenIndex t : s.unit_tokens) unit_indices.push_back(std::to_string(t));

  ordered_json quantity = {
      {"parsedValue", Number(s.parsed_value)},
      {"normalizedQuantity", Number(e.normalized.quantity)},
      {"rawValue", s.raw_value},
      {"rawUnit",
       {{"offsetStart", s.unit_start},
        {"offsetEnd", s.unit_end},
        {"tokenIndices", std::move(unit_indices)},
        {"name", s.raw_unit_name}}},
      {"offsetEnd", s.value_end},
      {"offsetStart", s.value_start},
      {"tokenIndex", s.value_token},
      {"normalizedUnit",
       {{"type", e.normalized.unit.type},
        {"name", e.normalized.unit.name},
        {"system", e.normalized.unit.system}}},
      {"type", e.normalized.unit.type}};
  if (!e.modifiers.empty()) {
    quantity["descriptors"] = DescriptorsToJson(e.modifiers);
  }

  ordered_json related = ordered_json::array();
  for (const RelatedWord &r : e.related) {
    related.push_back({{"rawName", r.raw_name},
                       {"connector", r.connector},
                       {"offsetEnd", r.offset_end},
                       {"relationForm", r.relation_form},
                       {"offsetStart", r.offset_start},
                       {"tokenIndex", r.token_index},
                       {"descriptors", DescriptorsToJson(r.descriptors)}});
  }
  return ordered_json{{"type", "value"},
                      {"quantity", std::move(quantity)},
                      {"related", std::move(related)}};
}

std::string SerializeExtraction(const Extraction &extraction) {
  return ExtractionToJson(extraction).dump();
}

std::string SerializeSentenceExtractions(const SentenceExtractions &record) {
  ordered_json measurements = ordered_json::array();
  for (const Extraction &e : record.measurements) {
    measurements.push_back(ExtractionToJson(e));
  }
  ordered_json out = {{"sentence_num", record.sentence_num},
                      {"sentence", record.sentence},
                      {"measurements", std::move(measurements)}};
  return out.dump();
}

std::vector<SentenceExtractions> ReadExtractionsJsonl(std::string_view input) {
  std::vector<SentenceExtractions> records;
  int line_number = 0;
  size_t start = 0;
  while (start < input.size()) {
    size_t newline = input.find('\n', start);
    std::string_view line = input.substr(
        start, newline == std::string_view::npos ? std::string_view::npos
                                                 : newline - start);
    start = newline == std::string_view::npos ? input.size() : newline + 1;
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;

    const std::string where = "extractions line " + std::to_string(line_number);
    json object = json::parse(line, nullptr, false);
    if (object.is_discarded() || !object.is_object()) {
      throw SchemaError(where + ": not a JSON object");
    }
    try {
      SentenceExtractions record;
      record.sentence_num = Get<int>(object, "sentence_num", where);
      record.sentence = Get<std::string>(object, "sentence", where);
      for (const json &m : object.at("measurements")) {
        record.measurements.push_back(ReadExtraction(m, where));
      }
      records.push_back(std::move(record));
    } catch (const json::exception &e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  return records;
}

}  // namespace mctx
