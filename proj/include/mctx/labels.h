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

#ifndef MCTX_LABELS_H_
#define MCTX_LABELS_H_

#include <string>
#include <string_view>
#include <vector>

namespace mctx {

// One labeled related entity: {"formalin": ["buffered"]}.
struct LabeledEntity {
  std::string name;
  std::vector<std::string> descriptors;

  bool operator==(const LabeledEntity &) const = default;
};

struct LabeledMeasurement {
  std::string number;
  std::string unit;
  std::vector<LabeledEntity> related;

  bool operator==(const LabeledMeasurement &) const = default;
};

struct LabeledSentence {
  int sentence_num = 0;
  std::string sentence;
  std::string source;  // optional grouping tag ("news", "scientific", ...)
  std::vector<LabeledMeasurement> measurements;

  bool operator==(const LabeledSentence &) const = default;
};

// Accepts a JSON array of label objects or JSON Lines. Throws SchemaError.
std::vector<LabeledSentence> LoadLabels(std::string_view input);

// One JSON object per line, same schema LoadLabels reads.
std::string ToLabelsJsonl(const std::vector<LabeledSentence> &labels);

}  // namespace mctx

#endif  // MCTX_LABELS_H_
