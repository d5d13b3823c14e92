// Copyright 2026 The GraphTool Authors
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

#ifndef GRAPHTOOL_CLI_H_
#define GRAPHTOOL_CLI_H_

#include <string_view>

namespace graphtool {

inline constexpr std::string_view kVersion = "0.1.0";

// Environment variables consulted by `run` and `build-dataset`.
inline constexpr std::string_view kEndpointEnv = "GRAPHTOOL_ENDPOINT";
inline constexpr std::string_view kApiKeyEnv = "GRAPHTOOL_API_KEY";
inline constexpr std::string_view kModelEnv = "GRAPHTOOL_MODEL";

// Exit codes: 0 success, 1 runtime failure, 2 usage error.
int RunCli(int argc, const char* const* argv);

}  // namespace graphtool

#endif  // GRAPHTOOL_CLI_H_
