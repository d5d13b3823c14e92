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

#ifndef GRAPHTOOL_ERRORS_H_
#define GRAPHTOOL_ERRORS_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace graphtool {

enum class ErrorCode {
  kInvalidArgument,
  kInvalidEdge,
  kWeightMismatch,
  kNoTriangle,
  kNotUndirected,
  kNotDirected,
  kCyclicGraph,
  kUnknownNode,
  kSameSourceSink,
  kUnreachable,
  kUnknownTool,
  kArityMismatch,
  kExhaustedRetries,
  kIoError,
  kMalformedLine,
  kOrphanTrace,
  kEmptyInput,
  kBackendError,
  kAuthError,
  kTimeoutError,
};

std::string_view ErrorCodeName(ErrorCode code);
std::optional<ErrorCode> ParseErrorCode(std::string_view name);

// The single exception type thrown by the library. Callers that need to
// distinguish failures switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace graphtool

#endif  // GRAPHTOOL_ERRORS_H_
