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

#include "mctx/graph.h"

#include <algorithm>

#include "mctx/errors.h"

namespace mctx {

std::pair<std::string, std::optional<std::string>> SplitEnhancedLabel(
    std::string_view raw_label) {
  size_t colon = raw_label.find(':');
  if (colon == std::string_view::npos) {
    return {std::string(raw_label), std::nullopt};
  }
  return {std::string(raw_label.substr(0, colon)),
          std::string(raw_label.substr(colon + 1))};
}

SentenceGraph::SentenceGraph(const Sentence &sentence)
    : node_count_(sentence.size()), adjacency_(sentence.size() + 1) {
  for (const DependencyArc &arc : sentence.arcs) {
    if (arc.head == 0) continue;
    const int id = static_cast<int>(edges_.size());
    edges_.push_back(Edge{arc.head, arc.dependent, arc.base_type,
                          arc.connector, arc.raw_label});
    adjacency_[arc.head].push_back(Incidence{arc.dependent, id});
    adjacency_[arc.dependent].push_back(Incidence{arc.head, id});
  }
  for (auto &list : adjacency_) {
    std::stable_sort(list.begin(), list.end(),
                     [this](const Incidence &a, const Incidence &b) {
                       if (a.neighbor != b.neighbor) {
                         return a.neighbor < b.neighbor;
                       }
                       return edges_[a.edge].raw_label <
                              edges_[b.edge].raw_label;
                     });
  }
}

std::span<const Incidence> SentenceGraph::IncidentEdges(TokenIndex node) const {
  if (node < 1 || node > node_count_) {
    throw ContractViolation("node " + std::to_string(node) +
                            " outside graph of " +
                            std::to_string(node_count_) + " nodes");
  }
  return adjacency_[node];
}

}  // namespace mctx
