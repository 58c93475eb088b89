// Copyright 2026 The epigame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EPIGAME_CLI_HPP_
#define EPIGAME_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace epigame {

// Exit codes of the command-line tool.
constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitInputError = 2;

// Runs the tool on `args` (without the program name).
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace epigame

#endif  // EPIGAME_CLI_HPP_
