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


// Command-line front end: extract, evaluate, stats, rules validate.

#ifndef MCTX_CLI_H_
#define MCTX_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace mctx {

// Runs the tool on `args` (args[0] is the program name). Data goes to `out`,
// diagnostics to `err`. Returns the process exit status.
int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err);

}  // namespace mctx

#endif  // MCTX_CLI_H_
