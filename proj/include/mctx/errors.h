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

#ifndef MCTX_ERRORS_H_
#define MCTX_ERRORS_H_

#include <stdexcept>
#include <string>

namespace mctx {

// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed CoNLL-U or other line-oriented input.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string &message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Structurally valid JSON that does not conform to an expected schema, or an
// annotated sentence that violates a token/arc invariant.
class SchemaError : public Error {
 public:
  using Error::Error;
};

// Rule file failed validation. The path is a JSON pointer into the rule file.
class RuleValidationError : public Error {
 public:
  RuleValidationError(const std::string &path, const std::string &message)
      : Error((path.empty() ? std::string("/") : path) + ": " + message),
        path_(path) {}

  const std::string &path() const { return path_; }

 private:
  std::string path_;
};

// Labeled measurement could not be located in its sentence.
class AlignmentError : public Error {
 public:
  AlignmentError(int sentence_num, const std::string &message)
      : Error("sentence " + std::to_string(sentence_num) + ": " + message),
        sentence_num_(sentence_num) {}

  int sentence_num() const { return sentence_num_; }

 private:
  int sentence_num_;
};

// Annotation service errors. Kept distinct so callers can tell a dead
// endpoint from a misbehaving one.
class ConnectionError : public Error {
 public:
  using Error::Error;
};

class HttpStatusError : public Error {
 public:
  HttpStatusError(int status, const std::string &message)
      : Error("HTTP " + std::to_string(status) + ": " + message),
        status_(status) {}

  int status() const { return status_; }

 private:
  int status_;
};

// Caller broke a documented precondition (e.g. node index out of range).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mctx

#endif  // MCTX_ERRORS_H_
