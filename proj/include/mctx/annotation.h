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

#ifndef MCTX_ANNOTATION_H_
#define MCTX_ANNOTATION_H_

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mctx {

// 1-based position of a token in its sentence. 0 denotes the virtual root.
using TokenIndex = int;

struct Token {
  TokenIndex index = 0;
  std::string text;
  std::string pos;  // Penn Treebank tag
  int offset_start = 0;  // inclusive, into Sentence::text
  int offset_end = 0;    // exclusive
  std::optional<std::string> lemma;

  bool operator==(const Token &) const = default;
};

struct DependencyArc {
  TokenIndex head = 0;
  TokenIndex dependent = 0;
  std::string base_type;
  std::optional<std::string> connector;
  std::string raw_label;

  bool operator==(const DependencyArc &) const = default;
};

// Builds an arc from a raw (possibly enhanced) label such as "nmod:of".
DependencyArc MakeArc(TokenIndex head, TokenIndex dependent,
                      std::string_view raw_label);

struct Sentence {
  int id = 0;
  std::string text;
  std::vector<Token> tokens;
  std::vector<DependencyArc> arcs;  // basic and enhanced arcs together

  const Token &token(TokenIndex index) const { return tokens[index - 1]; }
  int size() const { return static_cast<int>(tokens.size()); }

  bool operator==(const Sentence &) const = default;
};

// Receives non-fatal diagnostics (skipped lines, fragment warnings).
using WarningSink = std::function<void(const std::string &)>;

// Checks token and arc invariants. Throws SchemaError on violations; reports
// sentences with unattached tokens through `warn` without rejecting them.
void ValidateSentence(const Sentence &sentence,
                      const WarningSink &warn = nullptr);

// Removes arcs that repeat an earlier (head, dependent, raw_label) triple.
void DeduplicateArcs(std::vector<DependencyArc> &arcs);

// CoNLL-U reader. XPOS becomes Token::pos (UPOS when XPOS is "_"). Enhanced
// DEPS entries are merged with HEAD/DEPREL. Offsets come from "# text" when
// present, otherwise the text is rebuilt from FORM and SpaceAfter=No.
std::vector<Sentence> ParseConllu(std::istream &input,
                                  const WarningSink &warn = nullptr);
std::vector<Sentence> ParseConllu(std::string_view input,
                                  const WarningSink &warn = nullptr);

// Annotation JSON: {"sentences": [{"id", "text", "tokens", "deps"}]}.
std::vector<Sentence> ParseAnnotationJson(std::string_view input,
                                          const WarningSink &warn = nullptr);
std::string ToAnnotationJson(const std::vector<Sentence> &sentences);

struct ServiceOptions {
  int timeout_ms = 30000;
  int retries = 0;
};

// POSTs {"text": ...} to an annotation service and parses the response as
// annotation JSON. Throws ConnectionError, HttpStatusError or SchemaError.
std::vector<Sentence> FetchAnnotations(std::string_view text,
                                       const std::string &endpoint,
                                       const ServiceOptions &options = {},
                                       const WarningSink &warn = nullptr);

}  // namespace mctx

#endif  // MCTX_ANNOTATION_H_
