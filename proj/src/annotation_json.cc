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

#include <json.hpp>

#include "mctx/annotation.h"
#include "mctx/errors.h"

namespace mctx {
namespace {

using nlohmann::json;

class Reader {
 public:
  explicit Reader(std::string where) : where_(std::move(where)) {}

  const json &Field(const json &object, const char *name) const {
    if (!object.is_object()) throw SchemaError(where_ + ": expected an object");
    auto it = object.find(name);
    if (it == object.end()) {
      throw SchemaError(where_ + ": missing required field '" + name + "'");
    }
    return *it;
  }

  int Int(const json &object, const char *name) const {
    const json &v = Field(object, name);
    if (!v.is_number_integer()) {
      throw SchemaError(where_ + ": field '" + name + "' must be an integer");
    }
    return v.get<int>();
  }

  std::string String(const json &object, const char *name) const {
    const json &v = Field(object, name);
    if (!v.is_string()) {
      throw SchemaError(where_ + ": field '" + name + "' must be a string");
    }
    return v.get<std::string>();
  }

  const json &Array(const json &object, const char *name) const {
    const json &v = Field(object, name);
    if (!v.is_array()) {
      throw SchemaError(where_ + ": field '" + name + "' must be an array");
    }
    return v;
  }

 private:
  std::string where_;
};

Sentence ReadSentence(const json &object, size_t position,
                      const WarningSink &warn) {
  Reader top("sentence #" + std::to_string(position));
  Sentence sentence;
  sentence.id = top.Int(object, "id");
  Reader r("sentence " + std::to_string(sentence.id));
  sentence.text = r.String(object, "text");

  for (const json &t : r.Array(object, "tokens")) {
    Token token;
    token.index = r.Int(t, "index");
    token.text = r.String(t, "text");
    token.pos = r.String(t, "pos");
    token.offset_start = r.Int(t, "offsetStart");
    token.offset_end = r.Int(t, "offsetEnd");
    if (auto it = t.find("lemma"); it != t.end() && it->is_string()) {
      token.lemma = it->get<std::string>();
    }
    sentence.tokens.push_back(std::move(token));
  }
  for (const json &d : r.Array(object, "deps")) {
    std::string label = r.String(d, "label");
    sentence.arcs.push_back(MakeArc(r.Int(d, "head"), r.Int(d, "dependent"), label));
  }
  DeduplicateArcs(sentence.arcs);
  ValidateSentence(sentence, warn);
  return sentence;
}

}  // namespace

std::vector<Sentence> ParseAnnotationJson(std::string_view input,
                                          const WarningSink &warn) {
  json document = json::parse(input, nullptr, /*allow_exceptions=*/false);
  if (document.is_discarded()) {
    throw SchemaError("annotation JSON: not valid JSON");
  }
  Reader r("annotation JSON");
  std::vector<Sentence> sentences;
  const json &list = r.Array(document, "sentences");
  sentences.reserve(list.size());
  for (size_t i = 0; i < list.size(); ++i) {
    sentences.push_back(ReadSentence(list[i], i, warn));
  }
  return sentences;
}

std::string ToAnnotationJson(const std::vector<Sentence> &sentences) {
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const Sentence &s : sentences) {
    nlohmann::ordered_json tokens = nlohmann::ordered_json::array();
    for (const Token &t : s.tokens) {
      nlohmann::ordered_json token = {{"index", t.index},
                                      {"text", t.text},
                                      {"pos", t.pos},
                                      {"offsetStart", t.offset_start},
                                      {"offsetEnd", t.offset_end}};
      if (t.lemma) token["lemma"] = *t.lemma;
      tokens.push_back(std::move(token));
    }
    nlohmann::ordered_json deps = nlohmann::ordered_json::array();
    for (const DependencyArc &a : s.arcs) {
      deps.push_back({{"head", a.head},
                      {"dependent", a.dependent},
                      {"label", a.raw_label}});
    }
    list.push_back({{"id", s.id},
                    {"text", s.text},
                    {"tokens", std::move(tokens)},
                    {"deps", std::move(deps)}});
  }
  nlohmann::ordered_json document = {{"sentences", std::move(list)}};
  return document.dump(2);
}

}  // namespace mctx
