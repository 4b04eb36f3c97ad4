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


#include <random>
#include <set>

#include <doctest.h>
#include <json.hpp>

#include "mctx/errors.h"
#include "mctx/rules.h"
#include "test_util.h"

namespace mctx {
namespace {

using nlohmann::json;
constexpr auto kSpace = MeasurementFormat::kSpaceBetween;
constexpr auto kAttached = MeasurementFormat::kAttached;

const char kNmodOf[] =
    R"({"nmod": {"enhanced": true, "connectors": {"of": {"space_between": {"pos_in": {"NN": null}}}}}})";

TEST_CASE("load and look up an enhanced entry") {
  const RuleSet rules = RuleSet::Load(kNmodOf);
  const PosMatcher *m = rules.Lookup("nmod", "of", kSpace);
  REQUIRE(m != nullptr);
  const Action *a = MatchPos(*m, "NN");
  REQUIRE(a != nullptr);
  CHECK(std::holds_alternative<Accept>(*a));
  CHECK(rules.Lookup("nmod", "for", kSpace) == nullptr);
  CHECK(rules.Lookup("nmod", "of", kAttached) == nullptr);
  CHECK(rules.Lookup("nmod", std::nullopt, kSpace) == nullptr);
  CHECK(rules.Lookup("dobj", std::nullopt, kSpace) == nullptr);
}

TEST_CASE("wildcard connector and plain nodes") {
  const RuleSet rules = RuleSet::Load(R"({
    "nmod": {"enhanced": true, "connectors": {
      "of": {"space_between": {"pos_in": {"NN": null}}},
      "*": {"space_between": {"pos_in": {"JJ": null}}}}},
    "amod": {"enhanced": false, "formats": {"attached": {"pos_in": {"NN": null}}}}})");
  CHECK(MatchPos(*rules.Lookup("nmod", "for", kSpace), "JJ") != nullptr);
  CHECK(MatchPos(*rules.Lookup("nmod", "of", kSpace), "JJ") == nullptr);
  // Plain nodes ignore the connector.
  CHECK(rules.Lookup("amod", std::nullopt, kAttached) != nullptr);
  CHECK(rules.Lookup("amod", "x", kAttached) != nullptr);
}

TEST_CASE("conj listing only space_between misses attached") {
  const RuleSet rules =
      RuleSet::Load(testing::ReadTestData("conj_space_only_rules.json"));
  CHECK(rules.Lookup("conj", "and", kSpace) != nullptr);
  CHECK(rules.Lookup("conj", "and", kAttached) == nullptr);
}

TEST_CASE("empty rule file") {
  CHECK(RuleSet::Load("{}").nodes().empty());
}

TEST_CASE("match_pos") {
  PosMatcher m;
  m.pos_in["NN"] = Accept{};
  CHECK(MatchPos(m, "NNS") != nullptr);
  CHECK(MatchPos(m, "VB") == nullptr);

  VerbExpansion x;
  x.allowed_deps = {"nsubj"};
  m.pos_equals["VBZ"] = x;
  const Action *a = MatchPos(m, "VBZ");
  REQUIRE(a != nullptr);
  CHECK(std::get<VerbExpansion>(*a) == x);

  // Longest prefix wins regardless of insertion order.
  PosMatcher p;
  VerbExpansion deep = x;
  deep.max_depth = 5;
  p.pos_in["N"] = x;
  p.pos_in["NNP"] = deep;
  p.pos_in["NN"] = Accept{};
  CHECK(std::holds_alternative<Accept>(*MatchPos(p, "NNS")));
  CHECK(std::get<VerbExpansion>(*MatchPos(p, "NNPS")).max_depth == 5);
  CHECK(std::get<VerbExpansion>(*MatchPos(p, "NFP")).max_depth == 2);
}

TEST_CASE("verb expansion defaults") {
  const RuleSet rules = RuleSet::Load(
      R"({"dobj": {"enhanced": false, "formats": {"space_between": {"pos_equals": {"VBD": {}}}}}})");
  const auto &x = std::get<VerbExpansion>(
      *MatchPos(*rules.Lookup("dobj", std::nullopt, kSpace), "VBD"));
  CHECK(x.max_depth == 2);
  CHECK_FALSE(x.accept_self);
  CHECK(x.allowed_deps == std::vector<std::string>{"nsubj", "nsubjpass", "dobj", "iobj"});
  CHECK(x.chain_deps == std::vector<std::string>{"conj", "xcomp", "ccomp"});
}

TEST_CASE("validation failures carry a JSON pointer") {
  struct Case {
    const char *doc;
    const char *path;
  };
  const Case cases[] = {
      {R"([])", "/"},
      {R"({"nmod": {"enhanced": true, "formats": {"space_between": {"pos_in": {"NN": null}}}}})",
       "/nmod/formats"},
      {R"({"amod": {"enhanced": false, "connectors": {}}})", "/amod/connectors"},
      {R"({"amod": {"formats": {"space_between": {"pos_in": {"NN": null}}}}})", "/amod/enhanced"},
      {R"({"bogus": {"enhanced": false, "formats": {"attached": {"pos_in": {"NN": null}}}}})",
       "/bogus"},
      {R"({"nmod:of": {"enhanced": false, "formats": {"attached": {"pos_in": {"NN": null}}}}})",
       "/nmod:of"},
      {R"({"amod": {"enhanced": false, "formats": {}}})", "/amod/formats"},
      {R"({"amod": {"enhanced": false, "formats": {"spaced": {"pos_in": {"NN": null}}}}})",
       "/amod/formats/spaced"},
      {R"({"amod": {"enhanced": false, "formats": {"attached": {}}}})", "/amod/formats/attached"},
      {R"({"amod": {"enhanced": false, "formats": {"attached": {"pos_in": {"NN": 3}}}}})",
       "/amod/formats/attached/pos_in/NN"},
      {R"({"amod": {"enhanced": false, "formats": {"attached": {"pos_in": {"NN": {"max_depth": 0}}}}}})",
       "/amod/formats/attached/pos_in/NN/max_depth"},
      {R"({"amod": {"enhanced": false, "formats": {"attached": {"pos_in": {"NN": {"allowed_deps": []}}}}}})",
       "/amod/formats/attached/pos_in/NN/allowed_deps"},
      {R"({"amod": {"enhanced": false, "formats": {"attached": {"pos_in": {"NN": {"allowed_deps": ["xyz"]}}}}}})",
       "/amod/formats/attached/pos_in/NN/allowed_deps/0"},
      {R"({"amod": {"enhanced": false, "formats": {"attached": {"pos_in": {"VB": null}, "pos_equals": {"VBZ": null}}}}})",
       "/amod/formats/attached/pos_equals/VBZ"},
      {R"({"amod": {"enhanced": false, "formats": {"attached": {"pos_in": {"NN": null}}}, "extra": 1}})",
       "/amod/extra"},
  };
  for (const Case &c : cases) {
    INFO(c.doc);
    try {
      RuleSet::Load(c.doc);
      FAIL("accepted an invalid rule file");
    } catch (const RuleValidationError &e) {
      CHECK(e.path() == (std::string(c.path) == "/" ? "" : c.path));
    }
  }
  CHECK_THROWS_AS(RuleSet::Load("{"), RuleValidationError);
}

TEST_CASE("unknown dependencies pass in permissive mode") {
  const char doc[] =
      R"({"bogus": {"enhanced": false, "formats": {"attached": {"pos_in": {"NN": null}}}}})";
  CHECK_THROWS_AS(RuleSet::Load(doc), RuleValidationError);
  RuleLoadOptions options;
  options.allow_unknown_deps = true;
  CHECK(RuleSet::Load(doc, options).nodes().size() == 1);
}

// Random well-formed rule document.
json RandomRules(std::mt19937 &rng) {
  auto pick = [&rng](int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
  };
  const std::vector<std::string> deps = {"nmod", "amod", "dobj", "conj",
                                         "compound", "acl", "nsubj", "appos"};
  const std::vector<std::string> formats = {"space_between", "attached",
                                            "hyphenated"};
  auto action = [&]() -> json {
    if (pick(0, 1) == 0) return nullptr;
    json x = json::object();
    if (pick(0, 1)) x["max_depth"] = pick(1, 4);
    if (pick(0, 1)) x["accept_self"] = pick(0, 1) == 1;
    if (pick(0, 1)) x["allowed_deps"] = {"nsubj", deps[pick(0, 7)]};
    if (pick(0, 1)) x["chain_deps"] = json::array({deps[pick(0, 7)]});
    return x;
  };
  auto format_map = [&]() {
    json fm = json::object();
    for (const std::string &f : formats) {
      if (fm.empty() || pick(0, 1)) {
        json m = json::object();
        if (pick(0, 2) > 0) m["pos_in"]["NN"] = action();
        if (m.empty() || pick(0, 1)) m["pos_equals"]["VBD"] = action();
        fm[f] = m;
      }
    }
    return fm;
  };
  json doc = json::object();
  for (int i = pick(0, 5); i > 0; --i) {
    const std::string dep = deps[pick(0, 7)];
    json node;
    node["enhanced"] = pick(0, 1) == 1;
    if (node["enhanced"]) {
      node["connectors"]["*"] = format_map();
      if (pick(0, 1)) node["connectors"]["of"] = format_map();
    } else {
      node["formats"] = format_map();
    }
    doc[dep] = node;
  }
  return doc;
}

TEST_CASE("accepted rule sets round-trip") {
  std::mt19937 rng(3);
  for (int i = 0; i < 500; ++i) {
    const std::string text = RandomRules(rng).dump();
    INFO(text);
    const RuleSet rules = RuleSet::Load(text);
    REQUIRE(RuleSet::Load(rules.ToJson()) == rules);
  }
  REQUIRE(RuleSet::Load(RuleSet::Default().ToJson()) == RuleSet::Default());
}

TEST_CASE("key order does not matter") {
  const json doc = json::parse(testing::ReadTestData("conj_space_only_rules.json"));
  // nlohmann::json sorts keys; rebuild in reverse with ordered_json.
  nlohmann::ordered_json reversed = nlohmann::ordered_json::object();
  for (auto it = doc.rbegin(); it != doc.rend(); ++it) reversed[it.key()] = *it;
  CHECK(RuleSet::Load(reversed.dump()) == RuleSet::Load(doc.dump()));
}

TEST_CASE("default rule set stays small") {
  const RuleSet &rules = RuleSet::Default();
  std::set<std::string> pos_keys;
  auto scan = [&](const FormatMap &fm) {
    for (const auto &[format, m] : fm) {
      for (const auto &[k, a] : m.pos_in) pos_keys.insert(k);
      for (const auto &[k, a] : m.pos_equals) pos_keys.insert(k);
    }
  };
  for (const auto &[dep, node] : rules.nodes()) {
    CHECK(IsKnownDependency(dep));
    scan(node.formats);
    for (const auto &[word, fm] : node.connectors) scan(fm);
  }
  CHECK(rules.nodes().size() <= 20);
  CHECK(pos_keys.size() <= 12);
  CHECK(rules.Lookup("nmod", "of", kSpace) != nullptr);
  CHECK(rules.Lookup("advcl", std::nullopt, kSpace) == nullptr);
}

}  // namespace
}  // namespace mctx
