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

// CoNLL-U reader.

#include <charconv>
#include <sstream>

#include "mctx/annotation.h"
#include "mctx/errors.h"

namespace mctx {
namespace {

constexpr int kColumns = 10;

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<int> ParseInt(std::string_view s) {
  int value = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) return std::nullopt;
  return value;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

bool HasSpaceAfterNo(std::string_view misc) {
  size_t start = 0;
  while (start <= misc.size()) {
    size_t bar = misc.find('|', start);
    std::string_view item = misc.substr(
        start, bar == std::string_view::npos ? std::string_view::npos
                                             : bar - start);
    if (item == "SpaceAfter=No") return true;
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return false;
}

struct PendingToken {
  Token token;
  bool space_after = true;
  int line = 0;
};

class BlockBuilder {
 public:
  explicit BlockBuilder(const WarningSink &warn) : warn_(&warn) {}

  bool empty() const { return tokens_.empty() && !has_comments_; }

  void Comment(std::string_view body) {
    has_comments_ = true;
    body = Trim(body);
    auto take = [&](std::string_view key) -> std::optional<std::string_view> {
      if (body.substr(0, key.size()) != key) return std::nullopt;
      std::string_view rest = Trim(body.substr(key.size()));
      if (rest.empty() || rest.front() != '=') return std::nullopt;
      return Trim(rest.substr(1));
    };
    if (auto v = take("sent_id")) sent_id_ = ParseInt(*v);
    if (auto v = take("text")) text_ = std::string(*v);
  }

  void TokenLine(int line_number, std::string_view line) {
    std::vector<std::string_view> cols = SplitTabs(line);
    if (static_cast<int>(cols.size()) != kColumns) {
      throw ParseError(line_number,
                       "expected 10 tab-separated columns, found " +
                           std::to_string(cols.size()));
    }
    std::string_view id = cols[0];
    if (id.find('-') != std::string_view::npos) {
      Warn(line_number, "skipping multiword token range " + std::string(id));
      return;
    }
    if (id.find('.') != std::string_view::npos) {
      Warn(line_number, "skipping empty node " + std::string(id));
      return;
    }
    std::optional<int> index = ParseInt(id);
    if (!index || *index != static_cast<int>(tokens_.size()) + 1) {
      throw ParseError(line_number, "token id " + std::string(id) +
                                        " is not the next sequential index");
    }

    PendingToken pending;
    pending.line = line_number;
    pending.token.index = *index;
    pending.token.text = std::string(cols[1]);
    if (cols[2] != "_") pending.token.lemma = std::string(cols[2]);
    pending.token.pos = std::string(cols[4] != "_" ? cols[4] : cols[3]);
    pending.space_after = !HasSpaceAfterNo(cols[9]);
    if (pending.token.text.empty()) {
      throw ParseError(line_number, "empty FORM");
    }

    if (cols[6] != "_") {
      std::optional<int> head = ParseInt(cols[6]);
      if (!head) {
        throw ParseError(line_number, "HEAD is not an integer: " +
                                          std::string(cols[6]));
      }
      if (cols[7].empty() || cols[7] == "_") {
        throw ParseError(line_number, "HEAD given without DEPREL");
      }
      arcs_.push_back(MakeArc(*head, *index, cols[7]));
      arc_lines_.push_back(line_number);
    }
    if (cols[8] != "_") {
      std::string_view deps = cols[8];
      size_t start = 0;
      while (start <= deps.size()) {
        size_t bar = deps.find('|', start);
        std::string_view entry = deps.substr(
            start, bar == std::string_view::npos ? std::string_view::npos
                                                 : bar - start);
        size_t colon = entry.find(':');
        if (colon == std::string_view::npos || colon + 1 >= entry.size()) {
          throw ParseError(line_number,
                           "malformed DEPS entry: " + std::string(entry));
        }
        std::string_view head_field = entry.substr(0, colon);
        if (head_field.find('.') != std::string_view::npos) {
          Warn(line_number, "skipping DEPS entry on empty node " +
                                std::string(entry));
        } else {
          std::optional<int> head = ParseInt(head_field);
          if (!head) {
            throw ParseError(line_number,
                             "malformed DEPS head: " + std::string(entry));
          }
          arcs_.push_back(MakeArc(*head, *index, entry.substr(colon + 1)));
          arc_lines_.push_back(line_number);
        }
        if (bar == std::string_view::npos) break;
        start = bar + 1;
      }
    }
    tokens_.push_back(std::move(pending));
  }

  Sentence Finish(int ordinal, int end_line) {
    Sentence sentence;
    sentence.id = sent_id_.value_or(ordinal);
    if (tokens_.empty()) {
      throw ParseError(end_line, "sentence block has no tokens");
    }

    for (size_t i = 0; i < arcs_.size(); ++i) {
      const DependencyArc &arc = arcs_[i];
      if (arc.head < 0 || arc.head > static_cast<int>(tokens_.size())) {
        throw ParseError(arc_lines_[i], "head " + std::to_string(arc.head) +
                                            " outside sentence");
      }
    }

    if (!text_ || !AlignTo(*text_)) {
      if (text_) {
        Warn(end_line, "# text does not match token forms; rebuilding text");
      }
      Rebuild();
    }
    sentence.text = std::move(text_).value();
    for (PendingToken &p : tokens_) sentence.tokens.push_back(std::move(p.token));
    sentence.arcs = std::move(arcs_);
    DeduplicateArcs(sentence.arcs);
    return sentence;
  }

 private:
  void Warn(int line, const std::string &message) {
    if (*warn_) (*warn_)("line " + std::to_string(line) + ": " + message);
  }

  bool AlignTo(const std::string &text) {
    size_t cursor = 0;
    for (PendingToken &p : tokens_) {
      size_t at = text.find(p.token.text, cursor);
      if (at == std::string::npos) return false;
      for (size_t k = cursor; k < at; ++k) {
        if (text[k] != ' ' && text[k] != '\t') return false;
      }
      p.token.offset_start = static_cast<int>(at);
      p.token.offset_end = static_cast<int>(at + p.token.text.size());
      cursor = at + p.token.text.size();
    }
    return true;
  }

  void Rebuild() {
    std::string text;
    for (size_t i = 0; i < tokens_.size(); ++i) {
      PendingToken &p = tokens_[i];
      p.token.offset_start = static_cast<int>(text.size());
      text += p.token.text;
      p.token.offset_end = static_cast<int>(text.size());
      if (p.space_after && i + 1 < tokens_.size()) text += ' ';
    }
    text_ = std::move(text);
  }

  const WarningSink *warn_;
  bool has_comments_ = false;
  std::optional<int> sent_id_;
  std::optional<std::string> text_;
  std::vector<PendingToken> tokens_;
  std::vector<DependencyArc> arcs_;
  std::vector<int> arc_lines_;
};

}  // namespace

std::vector<Sentence> ParseConllu(std::istream &input,
                                  const WarningSink &warn) {
  std::vector<Sentence> sentences;
  BlockBuilder block(warn);
  std::string line;
  int line_number = 0;
  bool saw_token = false;
  auto flush = [&]() {
    if (saw_token) {
      sentences.push_back(
          block.Finish(static_cast<int>(sentences.size()) + 1, line_number));
    }
    block = BlockBuilder(warn);
    saw_token = false;
  };
  while (std::getline(input, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (Trim(line).empty()) {
      flush();
    } else if (line.front() == '#') {
      block.Comment(std::string_view(line).substr(1));
    } else {
      block.TokenLine(line_number, line);
      saw_token = true;
    }
  }
  flush();
  return sentences;
}

std::vector<Sentence> ParseConllu(std::string_view input,
                                  const WarningSink &warn) {
  std::istringstream stream{std::string(input)};
  return ParseConllu(stream, warn);
}

}  // namespace mctx
