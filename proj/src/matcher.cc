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

#include "mctx/matcher.h"

#include <algorithm>
#include <map>

namespace mctx {
namespace {

bool StartsWith(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

bool Contains(const std::vector<std::string> &list, std::string_view value) {
  return std::find(list.begin(), list.end(), value) != list.end();
}

RelatedWord MakeRelated(const Sentence &sentence, TokenIndex index,
                        const Edge &edge, std::string relation_form) {
  const Token &token = sentence.token(index);
  RelatedWord word;
  word.raw_name = token.text;
  word.token_index = index;
  word.offset_start = token.offset_start;
  word.offset_end = token.offset_end;
  word.relation_form = std::move(relation_form);
  if (edge.base_type == "conj" && edge.connector) word.connector = *edge.connector;
  return word;
}

std::vector<Descriptor> CollectDependents(
    const SentenceGraph &graph, const Sentence &sentence, TokenIndex head,
    const std::set<std::string, std::less<>> &deps,
    const MeasurementSpan &span) {
  std::map<TokenIndex, Descriptor> found;
  for (const Incidence &inc : graph.IncidentEdges(head)) {
    const Edge &edge = graph.edge(inc.edge);
    if (edge.head != head || !deps.contains(edge.base_type)) continue;
    if (span.IsMeasurementToken(inc.neighbor)) continue;
    found.try_emplace(inc.neighbor,
                      Descriptor{sentence.token(inc.neighbor).text,
                                 inc.neighbor, edge.base_type});
  }
  std::vector<Descriptor> out;
  out.reserve(found.size());
  for (auto &[index, d] : found) out.push_back(std::move(d));
  return out;
}

}  // namespace

std::vector<RelatedWord> ExpandVerbClause(const SentenceGraph &graph,
                                          const Sentence &sentence,
                                          TokenIndex token,
                                          const VerbExpansion &expansion,
                                          std::set<TokenIndex> &visited,
                                          int depth, const std::string &path) {
  std::vector<RelatedWord> candidates;
  visited.insert(token);
  const auto incident = graph.IncidentEdges(token);

  for (const Incidence &inc : incident) {
    const Edge &edge = graph.edge(inc.edge);
    if (visited.contains(inc.neighbor) || edge.head != token) continue;
    if (!Contains(expansion.allowed_deps, edge.base_type)) continue;
    if (!StartsWith(sentence.token(inc.neighbor).pos, "NN")) continue;
    candidates.push_back(MakeRelated(sentence, inc.neighbor, edge,
                                     path + "/" + edge.raw_label));
  }
  if (depth >= expansion.max_depth) return candidates;

  for (const Incidence &inc : incident) {
    const Edge &edge = graph.edge(inc.edge);
    if (visited.contains(inc.neighbor)) continue;
    if (!Contains(expansion.chain_deps, edge.base_type)) continue;
    if (!StartsWith(sentence.token(inc.neighbor).pos, "VB")) continue;
    std::vector<RelatedWord> deeper =
        ExpandVerbClause(graph, sentence, inc.neighbor, expansion, visited,
                         depth + 1, path + "/" + edge.raw_label);
    std::move(deeper.begin(), deeper.end(), std::back_inserter(candidates));
  }
  return candidates;
}

std::vector<Descriptor> ExtractDescriptors(const SentenceGraph &graph,
                                           const Sentence &sentence,
                                           TokenIndex related,
                                           const MeasurementSpan &span) {
  std::vector<Descriptor> out =
      CollectDependents(graph, sentence, related, kDescriptorDeps, span);
  std::erase_if(out, [related](const Descriptor &d) {
    return d.token_index == related;
  });
  return out;
}

std::vector<Descriptor> ExtractValueModifiers(const SentenceGraph &graph,
                                              const Sentence &sentence,
                                              const MeasurementSpan &span) {
  return CollectDependents(graph, sentence, span.value_token,
                           kValueModifierDeps, span);
}

Extraction ExtractContext(const SentenceGraph &graph, const Sentence &sentence,
                          const MeasurementSpan &span, const RuleSet &rules,
                          const UnitGazetteer &gazetteer) {
  Extraction extraction;
  extraction.span = span;
  extraction.normalized = Normalize(span, gazetteer);

  // Direct hits are collected before expansion results so that a word
  // reachable both ways keeps its direct relation form.
  std::vector<RelatedWord> direct;
  std::vector<RelatedWord> expanded;
  for (TokenIndex unit : span.unit_tokens) {
    for (const Incidence &inc : graph.IncidentEdges(unit)) {
      if (span.IsMeasurementToken(inc.neighbor)) continue;
      const Edge &edge = graph.edge(inc.edge);
      const PosMatcher *matcher =
          rules.Lookup(edge.base_type, edge.connector, span.format);
      if (matcher == nullptr) continue;
      const Action *action =
          MatchPos(*matcher, sentence.token(inc.neighbor).pos);
      if (action == nullptr) continue;

      if (std::holds_alternative<Accept>(*action)) {
        direct.push_back(
            MakeRelated(sentence, inc.neighbor, edge, edge.raw_label));
        continue;
      }
      const auto &expansion = std::get<VerbExpansion>(*action);
      if (expansion.accept_self) {
        direct.push_back(
            MakeRelated(sentence, inc.neighbor, edge, edge.raw_label));
      }
      std::set<TokenIndex> visited(span.unit_tokens.begin(),
                                   span.unit_tokens.end());
      visited.insert(span.value_token);
      std::vector<RelatedWord> found =
          ExpandVerbClause(graph, sentence, inc.neighbor, expansion, visited,
                           1, edge.raw_label);
      std::move(found.begin(), found.end(), std::back_inserter(expanded));
    }
  }

  std::map<TokenIndex, RelatedWord> unique;
  for (auto *list : {&direct, &expanded}) {
    for (RelatedWord &word : *list) {
      unique.try_emplace(word.token_index, std::move(word));
    }
  }
  extraction.related.reserve(unique.size());
  for (auto &[index, word] : unique) {
    word.descriptors = ExtractDescriptors(graph, sentence, index, span);
    extraction.related.push_back(std::move(word));
  }
  extraction.modifiers = ExtractValueModifiers(graph, sentence, span);
  return extraction;
}

}  // namespace mctx
