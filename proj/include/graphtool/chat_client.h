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

#ifndef GRAPHTOOL_CHAT_CLIENT_H_
#define GRAPHTOOL_CHAT_CLIENT_H_

#include <condition_variable>
#include <mutex>
#include <string>
#include <string_view>

#include "graphtool/backend.h"

namespace graphtool {

inline constexpr std::string_view kChatSystemMessage =
    "You are a careful assistant that solves graph reasoning tasks. Follow "
    "the output format exactly.";

// Splits "https://host:port/v1" into "https://host:port" and the request
// path, appending "/chat/completions" unless already present. Throws
// Error(kInvalidArgument).
struct EndpointParts {
  std::string base;
  std::string path;
};
EndpointParts SplitEndpoint(std::string_view endpoint);

// JSON request body: model, system + user messages, temperature, top_p,
// max_tokens.
std::string BuildChatRequestBody(std::string_view prompt,
                                 const CompletionConfig& config);

// choices[0].message.content; throws Error(kBackendError) on a malformed
// body.
std::string ParseChatResponse(std::string_view body);

// Remote chat-completions client. Transport errors and 5xx/429 responses
// are retried retry_count times with exponential backoff; 401/403 raise
// Error(kAuthError) immediately.
class ChatCompletionsBackend : public LlmBackend {
 public:
  explicit ChatCompletionsBackend(int max_in_flight = 1);

  std::string Complete(std::string_view prompt,
                       const CompletionConfig& config) override;

 private:
  int slots_;
  std::mutex mu_;
  std::condition_variable cv_;
};

}  // namespace graphtool

#endif  // GRAPHTOOL_CHAT_CLIENT_H_
