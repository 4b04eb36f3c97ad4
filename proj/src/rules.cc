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

#include "mctx/rules.h"

#include <algorithm>

#include <json.hpp>

#include "mctx/errors.h"

namespace mctx {

extern const char kDefaultRulesJson[];

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr std::string_view kKnownDependencies[] = {
    "acl",       "acomp",    "advcl",     "advmod",     "agent",
    "amod",      "appos",    "attr",      "aux",        "auxpass",
    "case",      "cc",       "ccomp",     "clf",        "complm",
    "compound",  "conj",     "cop",       "csubj",      "csubjpass",
    "dep",       "det",      "discourse", "dislocated", "dobj",
    "expl",      "fixed",    "flat",      "goeswith",   "iobj",
    "list",      "mark",     "mwe",       "name",       "neg",
    "nmod",      "npadvmod", "nsubj",     "nsubjpass",  "num",
    "number",    "nummod",   "obj",       "obl",        "orphan",
    "parataxis", "partmod",  "pcomp",     "pobj",       "poss",
    "possessive", "preconj", "predet",    "prep",       "prt",
    "punct",     "quantmod", "rcmod",     "ref",        "remnant",
    "reparandum", "root",    "tmod",      "vmod",       "vocative",
    "xcomp"};

std::string Escape(std::string_view token) {
  std::string out;
  for (char c : token) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

std::string Child(const std::string &path, std::string_view key) {
  return path + "/" + Escape(key);
}

class Loader {
 public:
  explicit Loader(const RuleLoadOptions &options) : options_(options) {}

  RuleSet Load(const json &document) {
    RuleSet rules;
    if (!document.is_object()) Fail("", "rule file must be a JSON object");
    for (const auto &[dep, node] : document.items()) {
      const std::string path = Child("", dep);
      if (dep.find(':') != std::string::npos) {
        Fail(path, "rule keys are base dependency types; use an enhanced "
                   "node with connectors for \"" + dep + "\"");
      }
      CheckDependency(path, dep);
      rules.mutable_nodes().emplace(dep, ReadNode(path, node));
    }
    return rules;
  }

 private:
  [[noreturn]] void Fail(const std::string &path, const std::string &message) {
    throw RuleValidationError(path, message);
  }

  void CheckDependency(const std::string &path, const std::string &dep) {
    if (dep.empty()) Fail(path, "empty dependency type");
    if (!options_.allow_unknown_deps && !IsKnownDependency(dep)) {
      Fail(path, "unknown dependency type \"" + dep +
                     "\" (use --allow-unknown-deps to permit)");
    }
  }

  RuleNode ReadNode(const std::string &path, const json &value) {
    if (!value.is_object()) Fail(path, "rule node must be an object");
    for (const auto &[key, unused] : value.items()) {
      if (key != "enhanced" && key != "connectors" && key != "formats") {
        Fail(Child(path, key), "unknown key \"" + key + "\"");
      }
    }
    auto enhanced = value.find("enhanced");
    if (enhanced == value.end() || !enhanced->is_boolean()) {
      Fail(Child(path, "enhanced"), "required boolean");
    }
    RuleNode node;
    node.enhanced = enhanced->get<bool>();
    if (node.enhanced) {
      if (value.contains("formats")) {
        Fail(Child(path, "formats"),
             "enhanced node must nest formats under connectors");
      }
      auto connectors = value.find("connectors");
      const std::string cpath = Child(path, "connectors");
      if (connectors == value.end() || !connectors->is_object()) {
        Fail(cpath, "enhanced node requires a connectors object");
      }
      if (connectors->empty()) Fail(cpath, "no connectors");
      for (const auto &[word, formats] : connectors->items()) {
        if (word.empty()) Fail(Child(cpath, word), "empty connector");
        node.connectors.emplace(word,
                                ReadFormats(Child(cpath, word), formats));
      }
    } else {
      if (value.contains("connectors")) {
        Fail(Child(path, "connectors"),
             "connectors require \"enhanced\": true");
      }
      auto formats = value.find("formats");
      if (formats == value.end()) {
        Fail(Child(path, "formats"), "plain node requires a formats object");
      }
      node.formats = ReadFormats(Child(path, "formats"), *formats);
    }
    return node;
  }

  FormatMap ReadFormats(const std::string &path, const json &value) {
    if (!value.is_object()) Fail(path, "format map must be an object");
    if (value.empty()) Fail(path, "at least one format key is required");
    FormatMap formats;
    for (const auto &[name, matcher] : value.items()) {
      std::optional<MeasurementFormat> format = FormatFromName(name);
      if (!format) {
        Fail(Child(path, name), "unknown format key \"" + name +
                                    "\" (expected space_between, attached "
                                    "or hyphenated)");
      }
      formats.emplace(*format, ReadMatcher(Child(path, name), matcher));
    }
    return formats;
  }

  PosMatcher ReadMatcher(const std::string &path, const json &value) {
    if (!value.is_object()) Fail(path, "PoS matcher must be an object");
    PosMatcher matcher;
    for (const auto &[key, entries] : value.items()) {
      const std::string kpath = Child(path, key);
      std::map<std::string, Action> *target = nullptr;
      if (key == "pos_in") {
        target = &matcher.pos_in;
      } else if (key == "pos_equals") {
        target = &matcher.pos_equals;
      } else {
        Fail(kpath, "unknown key \"" + key + "\"");
      }
      if (!entries.is_object()) Fail(kpath, "must be an object");
      for (const auto &[tag, action] : entries.items()) {
        if (tag.empty()) Fail(Child(kpath, tag), "empty PoS key");
        target->emplace(tag, ReadAction(Child(kpath, tag), action));
      }
    }
    if (matcher.pos_in.empty() && matcher.pos_equals.empty()) {
      Fail(path, "empty PosMatcher");
    }
    for (const auto &[tag, unused] : matcher.pos_equals) {
      for (const auto &[prefix, unused2] : matcher.pos_in) {
        if (tag.compare(0, prefix.size(), prefix) == 0) {
          Fail(Child(Child(path, "pos_equals"), tag),
               "overlaps pos_in key \"" + prefix + "\"");
        }
      }
    }
    return matcher;
  }

  Action ReadAction(const std::string &path, const json &value) {
    if (value.is_null()) return Accept{};
    if (!value.is_object()) {
      Fail(path, "action must be null (accept) or a verb expansion object");
    }
    VerbExpansion expansion;
    expansion.allowed_deps = {"nsubj", "nsubjpass", "dobj", "iobj"};
    expansion.chain_deps = {"conj", "xcomp", "ccomp"};
    for (const auto &[key, field] : value.items()) {
      const std::string fpath = Child(path, key);
      if (key == "allowed_deps" || key == "chain_deps") {
        if (!field.is_array()) Fail(fpath, "must be an array of strings");
        std::vector<std::string> deps;
        for (size_t i = 0; i < field.size(); ++i) {
          const std::string ipath = fpath + "/" + std::to_string(i);
          if (!field[i].is_string()) Fail(ipath, "must be a string");
          deps.push_back(field[i].get<std::string>());
          CheckDependency(ipath, deps.back());
        }
        (key == "allowed_deps" ? expansion.allowed_deps
                               : expansion.chain_deps) = std::move(deps);
      } else if (key == "max_depth") {
        if (!field.is_number_integer()) Fail(fpath, "must be an integer");
        expansion.max_depth = field.get<int>();
      } else if (key == "accept_self") {
        if (!field.is_boolean()) Fail(fpath, "must be a boolean");
        expansion.accept_self = field.get<bool>();
      } else {
        Fail(fpath, "unknown key \"" + key + "\"");
      }
    }
    if (expansion.max_depth < 1) {
      Fail(Child(path, "max_depth"), "must be at least 1");
    }
    if (expansion.allowed_deps.empty()) {
      Fail(Child(path, "allowed_deps"), "must not be empty");
    }
    return expansion;
  }

  RuleLoadOptions options_;
};

ordered_json ActionToJson(const Action &action) {
  if (std::holds_alternative<Accept>(action)) return nullptr;
  const auto &x = std::get<VerbExpansion>(action);
  return ordered_json{{"allowed_deps", x.allowed_deps},
                      {"chain_deps", x.chain_deps},
                      {"max_depth", x.max_depth},
                      {"accept_self", x.accept_self}};
}

ordered_json FormatsToJson(const FormatMap &formats) {
  ordered_json out = ordered_json::object();
  for (const auto &[format, matcher] : formats) {
    ordered_json m = ordered_json::object();
    for (const auto *group : {&matcher.pos_in, &matcher.pos_equals}) {
      if (group->empty()) continue;
      ordered_json entries = ordered_json::object();
      for (const auto &[tag, action] : *group) entries[tag] = ActionToJson(action);
      m[group == &matcher.pos_in ? "pos_in" : "pos_equals"] = std::move(entries);
    }
    out[std::string(FormatName(format))] = std::move(m);
  }
  return out;
}

}  // namespace

bool IsKnownDependency(std::string_view base_type) {
  return std::find(std::begin(kKnownDependencies), std::end(kKnownDependencies),
                   base_type) != std::end(kKnownDependencies);
}

RuleSet RuleSet::Load(std::string_view json_text,
                      const RuleLoadOptions &options) {
  json document = json::parse(json_text, nullptr, false);
  if (document.is_discarded()) {
    throw RuleValidationError("", "rule file is not valid JSON");
  }
  return Loader(options).Load(document);
}

const RuleSet &RuleSet::Default() {
  static const RuleSet rules = Load(kDefaultRulesJson);
  return rules;
}

const PosMatcher *RuleSet::Lookup(std::string_view base_type,
                                  const std::optional<std::string> &connector,
                                  MeasurementFormat format) const {
  auto node = nodes_.find(base_type);
  if (node == nodes_.end()) return nullptr;
  const FormatMap *formats = &node->second.formats;
  if (node->second.enhanced) {
    if (!connector) return nullptr;
    const auto &connectors = node->second.connectors;
    auto it = connectors.find(*connector);
    if (it == connectors.end()) it = connectors.find("*");
    if (it == connectors.end()) return nullptr;
    formats = &it->second;
  }
  auto matcher = formats->find(format);
  return matcher == formats->end() ? nullptr : &matcher->second;
}

std::string RuleSet::ToJson() const {
  ordered_json out = ordered_json::object();
  for (const auto &[dep, node] : nodes_) {
    ordered_json n = {{"enhanced", node.enhanced}};
    if (node.enhanced) {
      ordered_json connectors = ordered_json::object();
      for (const auto &[word, formats] : node.connectors) {
        connectors[word] = FormatsToJson(formats);
      }
      n["connectors"] = std::move(connectors);
    } else {
      n["formats"] = FormatsToJson(node.formats);
    }
    out[dep] = std::move(n);
  }
  return out.dump(2);
}

const Action *MatchPos(const PosMatcher &matcher, std::string_view pos_label) {
  if (auto it = matcher.pos_equals.find(std::string(pos_label));
      it != matcher.pos_equals.end()) {
    return &it->second;
  }
  const Action *best = nullptr;
  size_t best_length = 0;
  for (const auto &[prefix, action] : matcher.pos_in) {
    if (prefix.size() > best_length &&
        pos_label.substr(0, prefix.size()) == prefix) {
      best = &action;
      best_length = prefix.size();
    }
  }
  return best;
}

}  // namespace mctx
