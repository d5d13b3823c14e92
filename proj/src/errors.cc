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

#include "graphtool/errors.h"

namespace graphtool {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidEdge: return "InvalidEdge";
    case ErrorCode::kWeightMismatch: return "WeightMismatch";
    case ErrorCode::kNoTriangle: return "NoTriangle";
    case ErrorCode::kNotUndirected: return "NotUndirected";
    case ErrorCode::kNotDirected: return "NotDirected";
    case ErrorCode::kCyclicGraph: return "CyclicGraph";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kSameSourceSink: return "SameSourceSink";
    case ErrorCode::kUnreachable: return "Unreachable";
    case ErrorCode::kUnknownTool: return "UnknownTool";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kExhaustedRetries: return "ExhaustedRetries";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kOrphanTrace: return "OrphanTrace";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kBackendError: return "BackendError";
    case ErrorCode::kAuthError: return "AuthError";
    case ErrorCode::kTimeoutError: return "TimeoutError";
  }
  return "Unknown";
}

std::optional<ErrorCode> ParseErrorCode(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(ErrorCode::kTimeoutError); ++i) {
    const auto code = static_cast<ErrorCode>(i);
    if (ErrorCodeName(code) == name) return code;
  }
  return std::nullopt;
}

}  // namespace graphtool
