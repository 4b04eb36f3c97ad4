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

#ifndef MCTX_EXTRACTION_IO_H_
#define MCTX_EXTRACTION_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mctx/matcher.h"

namespace mctx {

// All measurements found in one sentence.
struct SentenceExtractions {
  int sentence_num = 0;
  std::string sentence;
  std::vector<Extraction> measurements;
};

// Measurement object in the output schema, keys in fixed order. Integral
// values are written without a decimal part.
nlohmann::ordered_json ExtractionToJson(const Extraction &extraction);

// Compact single-line JSON.
std::string SerializeExtraction(const Extraction &extraction);

// {"sentence_num", "sentence", "measurements": [...]} on one line, no
// trailing newline.
std::string SerializeSentenceExtractions(const SentenceExtractions &record);

// Reads JSON Lines written by SerializeSentenceExtractions. Descriptor
// relations are not part of the format and come back empty. Throws
// SchemaError.
std::vector<SentenceExtractions> ReadExtractionsJsonl(std::string_view input);

}  // namespace mctx

#endif  // MCTX_EXTRACTION_IO_H_
