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

#ifndef GRAPHTOOL_PIPELINE_H_
#define GRAPHTOOL_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphtool/backend.h"
#include "graphtool/codec.h"
#include "graphtool/errors.h"
#include "graphtool/prompts.h"
#include "graphtool/tasks.h"
#include "graphtool/tool_registry.h"

namespace graphtool {

struct StageRecord {
  StageKind stage = StageKind::kGraphExtraction;
  std::string instruction_text;
  // The task text the instruction is applied to.
  std::string input;
  std::string prompt;
  std::string raw_output;
  ExtractionResult parsed = ParseFailure{};
  double latency_ms = 0.0;
  // Set when the backend call itself failed.
  std::optional<std::string> backend_error;
};

struct ToolFailure {
  ErrorCode code = ErrorCode::kInvalidArgument;
  std::string message;
};

struct PipelineTrace {
  std::string instance_id;
  std::vector<StageRecord> stages;
  // The graph the tool ran on: the extracted edge list, or the contents of
  // the extracted file path.
  std::optional<Graph> graph;
  std::optional<Answer> tool_result;
  // Template retrieval, graph file resolution or dispatch failure.
  std::optional<ToolFailure> tool_error;
  bool skipped_parameter_stage = false;

  const StageRecord* Stage(StageKind stage) const;
};

struct PipelineOptions {
  // EL graph paths are resolved against this directory.
  std::filesystem::path graph_root = ".";
  CompletionConfig completion;
};

// Trimmed, case-folded exact lookup. Throws Error(kUnknownTool).
const ToolSpec& RetrieveToolTemplate(std::string_view name,
                                     const ToolRegistry& registry);

// Runs G, N and (for parametric kinds) P once each, then dispatches the
// tool. Failures of any kind end up in the trace; nothing is thrown.
PipelineTrace RunPipeline(const TaskInstance& instance, LlmBackend& backend,
                          const ToolRegistry& registry,
                          const PipelineOptions& options);

// Traces in input order; instances run concurrently on `workers` threads.
std::vector<PipelineTrace> RunPipelines(
    const std::vector<TaskInstance>& instances, LlmBackend& backend,
    const ToolRegistry& registry, const PipelineOptions& options,
    int workers = 1);

}  // namespace graphtool

#endif  // GRAPHTOOL_PIPELINE_H_
