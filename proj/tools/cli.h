// Copyright 2026 The Taalwatch Authors.
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

#ifndef TAALWATCH_TOOLS_CLI_H_
#define TAALWATCH_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace taalwatch::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDataError = 3,
  kIoError = 4,
};

// Runs one taalwatch command. args[0] is the program name. Data goes to
// `out`, diagnostics to `err`; failures print exactly one line of the form
// "taalwatch: error: <usage|data|io>: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace taalwatch::cli

#endif  // TAALWATCH_TOOLS_CLI_H_
