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

#ifndef MCTX_GRAPH_H_
#define MCTX_GRAPH_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mctx/annotation.h"

namespace mctx {

// Splits "nmod:of" into ("nmod", "of"). Only the first ':' separates; the
// connector is absent when there is no ':'.
std::pair<std::string, std::optional<std::string>> SplitEnhancedLabel(
    std::string_view raw_label);

// Undirected edge. The original arc direction is kept: `head` governs
// `dependent`.
struct Edge {
  TokenIndex head = 0;
  TokenIndex dependent = 0;
  std::string base_type;
  std::optional<std::string> connector;
  std::string raw_label;

  TokenIndex Other(TokenIndex node) const {
    return node == head ? dependent : head;
  }
};

struct Incidence {
  TokenIndex neighbor = 0;
  int edge = 0;  // index into SentenceGraph::edges()
};

// Per-sentence labeled multigraph over token indices 1..node_count(). Root
// arcs are not represented.
class SentenceGraph {
 public:
  explicit SentenceGraph(const Sentence &sentence);

  int node_count() const { return node_count_; }
  const std::vector<Edge> &edges() const { return edges_; }
  const Edge &edge(int id) const { return edges_[id]; }

  // Edges touching `node`, ordered by (neighbor index, raw label). Throws
  // ContractViolation when node is outside [1, node_count()].
  std::span<const Incidence> IncidentEdges(TokenIndex node) const;

 private:
  int node_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;  // slot 0 unused
};

inline SentenceGraph BuildGraph(const Sentence &sentence) {
  return SentenceGraph(sentence);
}

}  // namespace mctx

#endif  // MCTX_GRAPH_H_
