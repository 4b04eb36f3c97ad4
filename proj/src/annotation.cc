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

#include "mctx/annotation.h"

#include <set>
#include <tuple>

#include "mctx/errors.h"
#include "mctx/graph.h"

namespace mctx {

DependencyArc MakeArc(TokenIndex head, TokenIndex dependent,
                      std::string_view raw_label) {
  auto [base, connector] = SplitEnhancedLabel(raw_label);
  DependencyArc arc;
  arc.head = head;
  arc.dependent = dependent;
  arc.base_type = std::move(base);
  arc.connector = std::move(connector);
  arc.raw_label = std::string(raw_label);
  return arc;
}

void ValidateSentence(const Sentence &sentence, const WarningSink &warn) {
  const std::string where = "sentence " + std::to_string(sentence.id) + ": ";
  if (sentence.tokens.empty()) throw SchemaError(where + "no tokens");

  const int text_size = static_cast<int>(sentence.text.size());
  int previous_end = 0;
  for (size_t i = 0; i < sentence.tokens.size(); ++i) {
    const Token &token = sentence.tokens[i];
    const std::string at = where + "token " + std::to_string(token.index);
    if (token.index != static_cast<int>(i) + 1) {
      throw SchemaError(at + ": expected index " + std::to_string(i + 1));
    }
    if (token.offset_start >= token.offset_end) {
      throw SchemaError(at + ": offsetEnd must exceed offsetStart");
    }
    if (token.offset_start < previous_end) {
      throw SchemaError(at + ": offsets overlap the previous token");
    }
    if (token.offset_end > text_size) {
      throw SchemaError(at + ": offsets exceed sentence text");
    }
    if (sentence.text.compare(token.offset_start,
                              token.offset_end - token.offset_start,
                              token.text) != 0) {
      throw SchemaError(at + ": text \"" + token.text +
                        "\" does not match sentence text at its offsets");
    }
    if (token.pos.empty()) throw SchemaError(at + ": empty POS tag");
    previous_end = token.offset_end;
  }

  const int n = sentence.size();
  std::vector<bool> attached(n + 1, false);
  for (const DependencyArc &arc : sentence.arcs) {
    const std::string at = where + "arc " + std::to_string(arc.head) + "->" +
                           std::to_string(arc.dependent) + " " + arc.raw_label;
    if (arc.dependent < 1 || arc.dependent > n || arc.head < 0 ||
        arc.head > n) {
      throw SchemaError(at + ": endpoint out of range");
    }
    if (arc.head == arc.dependent) throw SchemaError(at + ": self loop");
    if (arc.raw_label.empty()) throw SchemaError(at + ": empty label");
    if (arc.head == 0 && arc.connector) {
      throw SchemaError(at + ": root arc carries a connector");
    }
    attached[arc.dependent] = true;
  }
  if (warn) {
    for (int i = 1; i <= n; ++i) {
      if (!attached[i]) {
        warn(where + "token " + std::to_string(i) +
             " has no incoming arc (fragment)");
      }
    }
  }
}

void DeduplicateArcs(std::vector<DependencyArc> &arcs) {
  std::set<std::tuple<TokenIndex, TokenIndex, std::string>> seen;
  std::vector<DependencyArc> unique;
  unique.reserve(arcs.size());
  for (DependencyArc &arc : arcs) {
    if (seen.emplace(arc.head, arc.dependent, arc.raw_label).second) {
      unique.push_back(std::move(arc));
    }
  }
  arcs = std::move(unique);
}

}  // namespace mctx
