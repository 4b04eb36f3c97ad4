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

#ifndef MCTX_MATCHER_H_
#define MCTX_MATCHER_H_

#include <set>
#include <string>
#include <vector>

#include "mctx/annotation.h"
#include "mctx/detector.h"
#include "mctx/graph.h"
#include "mctx/rules.h"
#include "mctx/units.h"

namespace mctx {

struct Descriptor {
  std::string raw_name;
  TokenIndex token_index = 0;
  std::string relation;  // base type of the descriptor edge; not serialized

  bool operator==(const Descriptor &) const = default;
};

struct RelatedWord {
  std::string raw_name;
  TokenIndex token_index = 0;
  int offset_start = 0;
  int offset_end = 0;
  // Raw label of the matched edge, or the labels along a clause expansion
  // joined with '/', starting at the unit token.
  std::string relation_form;
  std::string connector;  // set for conj-type edges only
  std::vector<Descriptor> descriptors;

  bool operator==(const RelatedWord &) const = default;
};

struct Extraction {
  MeasurementSpan span;
  NormalizedQuantity normalized;
  std::vector<Descriptor> modifiers;  // "around" in "around 40 elephants"
  std::vector<RelatedWord> related;   // ordered by token index
};

// Dependency types that attach descriptors to a related word, and modifiers
// to a measurement value.
inline const std::set<std::string, std::less<>> kDescriptorDeps = {
    "amod", "compound", "nummod", "advmod"};
inline const std::set<std::string, std::less<>> kValueModifierDeps = {
    "advmod", "quantmod"};

// Walks the graph outward from the unit token(s) of `span` under `rules`.
Extraction ExtractContext(const SentenceGraph &graph, const Sentence &sentence,
                          const MeasurementSpan &span, const RuleSet &rules,
                          const UnitGazetteer &gazetteer);

// Candidates reached by clause expansion from `token` (depth 1). `visited`
// must already hold the measurement tokens; `path` is the label chain that
// led to `token`. Candidates carry no descriptors.
std::vector<RelatedWord> ExpandVerbClause(const SentenceGraph &graph,
                                          const Sentence &sentence,
                                          TokenIndex token,
                                          const VerbExpansion &expansion,
                                          std::set<TokenIndex> &visited,
                                          int depth, const std::string &path);

// One-hop modifiers governed by `related`, excluding the measurement tokens.
std::vector<Descriptor> ExtractDescriptors(const SentenceGraph &graph,
                                           const Sentence &sentence,
                                           TokenIndex related,
                                           const MeasurementSpan &span);

std::vector<Descriptor> ExtractValueModifiers(const SentenceGraph &graph,
                                              const Sentence &sentence,
                                              const MeasurementSpan &span);

}  // namespace mctx

#endif  // MCTX_MATCHER_H_
