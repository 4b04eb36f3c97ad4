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

#ifndef MCTX_RULES_H_
#define MCTX_RULES_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mctx/detector.h"

namespace mctx {

// Terminal action: the matched token is a related word. Encoded as JSON null.
struct Accept {
  bool operator==(const Accept &) const = default;
};

// Clause expansion from the matched token (usually a verb). Dependents of the
// token over `allowed_deps` that are nouns become related words; neighbors
// over `chain_deps` that are verbs are expanded in turn, up to `max_depth`
// tokens deep (the matched token is depth 1).
struct VerbExpansion {
  std::vector<std::string> allowed_deps;
  std::vector<std::string> chain_deps;
  int max_depth = 2;
  bool accept_self = false;  // also report the matched token itself

  bool operator==(const VerbExpansion &) const = default;
};

using Action = std::variant<Accept, VerbExpansion>;

struct PosMatcher {
  std::map<std::string, Action> pos_in;      // key is a prefix of the tag
  std::map<std::string, Action> pos_equals;  // key equals the tag

  bool operator==(const PosMatcher &) const = default;
};

using FormatMap = std::map<MeasurementFormat, PosMatcher>;

struct RuleNode {
  bool enhanced = false;
  std::map<std::string, FormatMap> connectors;  // used when enhanced
  FormatMap formats;                            // used otherwise

  bool operator==(const RuleNode &) const = default;
};

struct RuleLoadOptions {
  bool allow_unknown_deps = false;
};

class RuleSet {
 public:
  RuleSet() = default;

  // Parses and validates a rule file. Throws RuleValidationError carrying a
  // JSON pointer to the offending element.
  static RuleSet Load(std::string_view json_text,
                      const RuleLoadOptions &options = {});

  // The rule set shipped in data/default_rules.json.
  static const RuleSet &Default();

  // Resolves base type, then (for enhanced nodes) the connector, exact match
  // first and "*" second, then the format. Enhanced nodes never match an arc
  // without a connector; plain nodes ignore the connector.
  const PosMatcher *Lookup(std::string_view base_type,
                           const std::optional<std::string> &connector,
                           MeasurementFormat format) const;

  // Canonical rule-file JSON; Load(ToJson()) reproduces this RuleSet.
  std::string ToJson() const;

  const std::map<std::string, RuleNode, std::less<>> &nodes() const {
    return nodes_;
  }
  std::map<std::string, RuleNode, std::less<>> &mutable_nodes() {
    return nodes_;
  }

  bool operator==(const RuleSet &) const = default;

 private:
  std::map<std::string, RuleNode, std::less<>> nodes_;
};

// pos_equals first (exact), then the longest pos_in key that prefixes
// `pos_label`.
const Action *MatchPos(const PosMatcher &matcher, std::string_view pos_label);

// Stanford and Universal Dependencies base relation names.
bool IsKnownDependency(std::string_view base_type);

}  // namespace mctx

#endif  // MCTX_RULES_H_
