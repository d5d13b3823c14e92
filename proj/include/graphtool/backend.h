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

#ifndef GRAPHTOOL_BACKEND_H_
#define GRAPHTOOL_BACKEND_H_

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graphtool/prompts.h"
#include "graphtool/tasks.h"
#include "graphtool/tool_registry.h"

namespace graphtool {

// Defaults follow the reference inference regime: 4096 new tokens,
// top_p 1, temperature 0.7.
struct CompletionConfig {
  int max_new_tokens = 4096;
  double top_p = 1.0;
  double temperature = 0.7;
  std::string model;
  std::string endpoint;
  std::string api_key;  // never serialized or logged
  int retry_count = 2;
  int timeout_ms = 120000;
  int backoff_ms = 500;
  // Upper bound on concurrent requests to the remote endpoint.
  int max_in_flight = 1;

  void Validate() const;
};

// Text in, text out. Implementations must tolerate concurrent calls.
class LlmBackend {
 public:
  virtual ~LlmBackend() = default;
  // Throws Error(kBackendError / kAuthError / kTimeoutError).
  virtual std::string Complete(std::string_view prompt,
                               const CompletionConfig& config) = 0;
};

// Answers every stage prompt with the perfectly formatted gold output of the
// instance whose id the prompt carries.
class OracleBackend : public LlmBackend {
 public:
  OracleBackend(std::vector<TaskInstance> corpus, ToolRegistry registry);

  std::string Complete(std::string_view prompt,
                       const CompletionConfig& config) override;

  const TaskInstance* Lookup(std::string_view id) const;
  const ToolRegistry& registry() const { return registry_; }

  // The gold stage output for `instance`.
  std::string GoldOutput(const TaskInstance& instance, StageKind stage) const;

 private:
  std::vector<TaskInstance> corpus_;
  std::unordered_map<std::string, std::size_t> by_id_;
  ToolRegistry registry_;
};

enum class FaultMode {
  kNone,
  kDropGraphEdges,
  kWrongToolName,
  kSwapParameters,
  kEmitGarbage,
};

std::string_view FaultModeName(FaultMode mode);
std::optional<FaultMode> ParseFaultMode(std::string_view name);

// Per-mode corruption probabilities. Each mode targets its own stage
// (drop: graph, wrong name: name, swap: parameters); garbage hits any stage.
// At most one mode fires per stage call, tried in enum order.
struct FaultPlan {
  std::map<FaultMode, double> probability;

  // "drop_graph_edges=0.2,emit_garbage=0.05"; throws Error(kInvalidArgument).
  static FaultPlan Parse(std::string_view spec);
  double Of(FaultMode mode) const;
  void Validate() const;
};

struct FaultLabel {
  std::string instance_id;
  StageKind stage;
  FaultMode mode;
};

// Wraps an oracle and corrupts its outputs. The corruption actually applied
// is recorded out of band, keyed by instance id and stage; it never appears
// in the completion text. Modes that cannot apply (edge dropping on file
// paths or single-edge graphs, swapping a single parameter) are skipped.
class FaultBackend : public LlmBackend {
 public:
  FaultBackend(std::shared_ptr<const OracleBackend> oracle, FaultPlan plan,
               std::uint64_t seed);

  std::string Complete(std::string_view prompt,
                       const CompletionConfig& config) override;

  // Applied corruptions (mode != kNone), ordered by instance id then stage.
  std::vector<FaultLabel> Labels() const;
  std::map<std::string, std::vector<FaultLabel>> LabelsByInstance() const;

  static constexpr std::string_view kGarbageText =
      "I am not sure how to approach this. The task seems to involve some "
      "graph, but I cannot tell which details matter, so I will leave the "
      "answer open.";

 private:
  std::shared_ptr<const OracleBackend> oracle_;
  FaultPlan plan_;
  std::uint64_t seed_;
  mutable std::mutex mu_;
  std::map<std::pair<std::string, StageKind>, FaultMode> labels_;
};

}  // namespace graphtool

#endif  // GRAPHTOOL_BACKEND_H_
