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

#include "mctx/labels.h"

#include <json.hpp>

#include "mctx/errors.h"

namespace mctx {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

LabeledSentence ReadLabel(const json &object, const std::string &position) {
  if (!object.is_object()) throw SchemaError(position + ": expected an object");
  std::string where = position;
  LabeledSentence label;
  if (auto it = object.find("sentence_num"); it != object.end()) {
    if (!it->is_number_integer()) {
      throw SchemaError(where + ": 'sentence_num' must be an integer");
    }
    label.sentence_num = it->get<int>();
    where = "sentence_num " + std::to_string(label.sentence_num);
  } else {
    throw SchemaError(where + ": missing required field 'sentence_num'");
  }

  auto text = object.find("sentence");
  if (text == object.end() || !text->is_string()) {
    throw SchemaError(where + ": missing required field 'sentence'");
  }
  label.sentence = text->get<std::string>();
  if (auto it = object.find("source"); it != object.end() && it->is_string()) {
    label.source = it->get<std::string>();
  }

  auto measurements = object.find("measurements");
  if (measurements == object.end() || !measurements->is_array()) {
    throw SchemaError(where + ": missing required field 'measurements'");
  }
  for (const json &m : *measurements) {
    LabeledMeasurement measurement;
    for (const char *field : {"number", "unit"}) {
      auto it = m.find(field);
      if (it == m.end() || !it->is_string()) {
        throw SchemaError(where + ": measurement missing string field '" +
                          field + "'");
      }
      (std::string_view(field) == "number" ? measurement.number
                                            : measurement.unit) =
          it->get<std::string>();
    }
    auto related = m.find("related");
    if (related != m.end()) {
      if (!related->is_array()) {
        throw SchemaError(where + ": 'related' must be an array");
      }
      for (const json &entry : *related) {
        if (!entry.is_object()) {
          throw SchemaError(where + ": related entries must be objects");
        }
        for (const auto &[name, descriptors] : entry.items()) {
          if (name.empty() ||
              label.sentence.find(name) == std::string::npos) {
            throw SchemaError(where + ": related entity \"" + name +
                              "\" does not occur in the sentence");
          }
          LabeledEntity entity;
          entity.name = name;
          if (!descriptors.is_array()) {
            throw SchemaError(where + ": descriptors of \"" + name +
                              "\" must be an array");
          }
          for (const json &d : descriptors) {
            if (!d.is_string()) {
              throw SchemaError(where + ": descriptor must be a string");
            }
            entity.descriptors.push_back(d.get<std::string>());
          }
          measurement.related.push_back(std::move(entity));
        }
      }
    }
    label.measurements.push_back(std::move(measurement));
  }
  return label;
}

}  // namespace

std::vector<LabeledSentence> LoadLabels(std::string_view input) {
  std::vector<LabeledSentence> labels;
  json whole = json::parse(input, nullptr, false);
  if (!whole.is_discarded()) {
    if (whole.is_array()) {
      for (size_t i = 0; i < whole.size(); ++i) {
        labels.push_back(ReadLabel(whole[i], "label #" + std::to_string(i)));
      }
      return labels;
    }
    if (whole.is_object()) {
      labels.push_back(ReadLabel(whole, "label #0"));
      return labels;
    }
  }

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
    const std::string where = "labels line " + std::to_string(line_number);
    json object = json::parse(line, nullptr, false);
    if (object.is_discarded()) throw SchemaError(where + ": invalid JSON");
    labels.push_back(ReadLabel(object, where));
  }
  return labels;
}

std::string ToLabelsJsonl(const std::vector<LabeledSentence> &labels) {
  std::string out;
  for (const LabeledSentence &label : labels) {
    ordered_json measurements = ordered_json::array();
    for (const LabeledMeasurement &m : label.measurements) {
      ordered_json related = ordered_json::array();
      for (const LabeledEntity &e : m.related) {
        related.push_back({{e.name, e.descriptors}});
      }
      measurements.push_back(
          {{"number", m.number}, {"unit", m.unit}, {"related", related}});
    }
    ordered_json object = {{"measurements", std::move(measurements)},
                           {"sentence_num", label.sentence_num},
                           {"sentence", label.sentence}};
    if (!label.source.empty()) object["source"] = label.source;
    out += object.dump();
    out += '\n';
  }
  return out;
}

}  // namespace mctx
