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

#include "graphtool/chat_client.h"

#include <chrono>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "graphtool/errors.h"

namespace graphtool {
namespace {

using nlohmann::json;

constexpr std::string_view kChatPath = "/chat/completions";

class SlotGuard {
 public:
  SlotGuard(std::mutex& mu, std::condition_variable& cv, int& slots)
      : mu_(mu), cv_(cv), slots_(slots) {
    std::unique_lock lock(mu_);
    cv_.wait(lock, [&] { return slots_ > 0; });
    --slots_;
  }
  ~SlotGuard() {
    {
      std::lock_guard lock(mu_);
      ++slots_;
    }
    cv_.notify_one();
  }

 private:
  std::mutex& mu_;
  std::condition_variable& cv_;
  int& slots_;
};

bool Retryable(int status) { return status == 429 || status >= 500; }

}  // namespace

EndpointParts SplitEndpoint(std::string_view endpoint) {
  const auto scheme = endpoint.find("://");
  if (scheme == std::string_view::npos) {
    throw Error(ErrorCode::kInvalidArgument,
                "endpoint must start with http:// or https://");
  }
  const std::string_view proto = endpoint.substr(0, scheme);
  if (proto != "http" && proto != "https") {
    throw Error(ErrorCode::kInvalidArgument,
                "unsupported endpoint scheme '" + std::string(proto) + "'");
  }
  const auto slash = endpoint.find('/', scheme + 3);
  EndpointParts parts;
  parts.base = std::string(endpoint.substr(0, slash));
  if (parts.base.size() == scheme + 3) {
    throw Error(ErrorCode::kInvalidArgument, "endpoint has no host");
  }
  std::string path = slash == std::string_view::npos
                         ? std::string()
                         : std::string(endpoint.substr(slash));
  while (!path.empty() && path.back() == '/') path.pop_back();
  if (path.size() < kChatPath.size() ||
      path.compare(path.size() - kChatPath.size(), kChatPath.size(),
                   kChatPath) != 0) {
    path += kChatPath;
  }
  parts.path = std::move(path);
  return parts;
}

std::string BuildChatRequestBody(std::string_view prompt,
                                 const CompletionConfig& config) {
  json body = {
      {"model", config.model},
      {"messages",
       json::array({{{"role", "system"}, {"content", kChatSystemMessage}},
                    {{"role", "user"}, {"content", std::string(prompt)}}})},
      {"temperature", config.temperature},
      {"top_p", config.top_p},
      {"max_tokens", config.max_new_tokens},
  };
  return body.dump();
}

std::string ParseChatResponse(std::string_view body) {
  const json doc = json::parse(body, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) {
    throw Error(ErrorCode::kBackendError, "response body is not JSON");
  }
  try {
    const json& content = doc.at("choices").at(0).at("message").at("content");
    if (content.is_null()) return "";
    return content.get<std::string>();
  } catch (const json::exception&) {
    throw Error(ErrorCode::kBackendError,
                "response lacks choices[0].message.content");
  }
}

ChatCompletionsBackend::ChatCompletionsBackend(int max_in_flight)
    : slots_(max_in_flight < 1 ? 1 : max_in_flight) {}

std::string ChatCompletionsBackend::Complete(std::string_view prompt,
                                             const CompletionConfig& config) {
  config.Validate();
  const EndpointParts parts = SplitEndpoint(config.endpoint);
  const std::string body = BuildChatRequestBody(prompt, config);
  SlotGuard slot(mu_, cv_, slots_);

  httplib::Client client(parts.base);
  const auto timeout = std::chrono::milliseconds(config.timeout_ms);
  client.set_connection_timeout(timeout);
  client.set_read_timeout(timeout);
  client.set_write_timeout(timeout);
  httplib::Headers headers;
  if (!config.api_key.empty()) {
    headers.emplace("Authorization", "Bearer " + config.api_key);
  }

  std::string last_error;
  bool last_was_timeout = false;
  for (int attempt = 0; attempt <= config.retry_count; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(
          std::chrono::milliseconds(config.backoff_ms) * (1LL << (attempt - 1)));
    }
    auto res = client.Post(parts.path, headers, body, "application/json");
    if (!res) {
      last_was_timeout = res.error() == httplib::Error::Read ||
                         res.error() == httplib::Error::Write ||
                         res.error() == httplib::Error::ConnectionTimeout;
      last_error = httplib::to_string(res.error());
      continue;
    }
    if (res->status == 401 || res->status == 403) {
      throw Error(ErrorCode::kAuthError,
                  "endpoint rejected credentials (HTTP " +
                      std::to_string(res->status) + ")");
    }
    if (Retryable(res->status)) {
      last_was_timeout = false;
      last_error = "HTTP " + std::to_string(res->status);
      continue;
    }
    if (res->status < 200 || res->status >= 300) {
      throw Error(ErrorCode::kBackendError,
                  "endpoint returned HTTP " + std::to_string(res->status));
    }
    return ParseChatResponse(res->body);
  }
  const std::string attempts = std::to_string(config.retry_count + 1);
  if (last_was_timeout) {
    throw Error(ErrorCode::kTimeoutError,
                "request timed out after " + attempts + " attempt(s)");
  }
  throw Error(ErrorCode::kBackendError,
              "request failed after " + attempts + " attempt(s): " + last_error);
}

}  // namespace graphtool
