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

#include "graphtool/pipeline.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <thread>

namespace graphtool {
namespace {

StageRecord RunStage(StageKind stage, const Prompt& prompt,
                     LlmBackend& backend, const CompletionConfig& config) {
  StageRecord record;
  record.stage = stage;
  record.instruction_text = prompt.instruction;
  record.input = prompt.input;
  record.prompt = prompt.text;
  const auto start = std::chrono::steady_clock::now();
  try {
    record.raw_output = backend.Complete(prompt.text, config);
  } catch (const Error& e) {
    record.backend_error = std::string(ErrorCodeName(e.code())) + ": " + e.what();
  } catch (const std::exception& e) {
    record.backend_error = e.what();
  }
  record.latency_ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return record;
}

std::string Normalize(std::string_view name) {
  const auto first = name.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = name.find_last_not_of(" \t\r\n");
  std::string out(name.substr(first, last - first + 1));
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

const StageRecord* PipelineTrace::Stage(StageKind stage) const {
  for (const StageRecord& record : stages) {
    if (record.stage == stage) return &record;
  }
  return nullptr;
}

const ToolSpec& RetrieveToolTemplate(std::string_view name,
                                     const ToolRegistry& registry) {
  const std::string key = Normalize(name);
  for (const ToolSpec& spec : registry.specs()) {
    if (Normalize(spec.name) == key) return spec;
  }
  throw Error(ErrorCode::kUnknownTool,
              "no tool named '" + std::string(name) + "'");
}

PipelineTrace RunPipeline(const TaskInstance& instance, LlmBackend& backend,
                          const ToolRegistry& registry,
                          const PipelineOptions& options) {
  PipelineTrace trace;
  trace.instance_id = instance.id;
  trace.skipped_parameter_stage = instance.basic_analysis();
  const WeightKind weight_kind = ToolWeightKind(instance.kind.tool);
  bool ready = true;

  // Stage G.
  {
    StageRecord record = RunStage(StageKind::kGraphExtraction,
                                  BuildGraphInstruction(instance), backend,
                                  options.completion);
    if (record.backend_error) {
      record.parsed = ParseFailure{"backend error: " + *record.backend_error};
    } else if (instance.size_class == SizeClass::kExceedsLimit) {
      record.parsed = ExtractFilePath(record.raw_output);
    } else {
      record.parsed = ExtractGraph(record.raw_output, weight_kind,
                                   instance.kind.directed);
    }
    if (const auto* g = std::get_if<ExtractedGraph>(&record.parsed)) {
      trace.graph = g->graph;
    } else if (const auto* p = std::get_if<ExtractedPath>(&record.parsed)) {
      try {
        trace.graph = ReadElGraphFile(options.graph_root / p->path, weight_kind);
      } catch (const Error& e) {
        trace.tool_error = ToolFailure{e.code(), e.what()};
      }
    }
    if (!trace.graph) ready = false;
    trace.stages.push_back(std::move(record));
  }

  // Stage N.
  const ToolSpec* spec = nullptr;
  {
    StageRecord record = RunStage(StageKind::kToolNameIdentification,
                                  BuildTaskInstruction(instance, registry),
                                  backend, options.completion);
    if (record.backend_error) {
      record.parsed = ParseFailure{"backend error: " + *record.backend_error};
    } else {
      record.parsed = ExtractToolName(record.raw_output);
    }
    if (const auto* n = std::get_if<ExtractedName>(&record.parsed)) {
      try {
        spec = &RetrieveToolTemplate(n->name, registry);
      } catch (const Error& e) {
        if (!trace.tool_error) trace.tool_error = ToolFailure{e.code(), e.what()};
      }
    }
    if (!spec) ready = false;
    trace.stages.push_back(std::move(record));
  }

  // Stage P.
  std::vector<std::int64_t> params;
  if (!trace.skipped_parameter_stage) {
    StageRecord record;
    record.stage = StageKind::kToolParameterExtraction;
    if (!spec) {
      record.parsed = ParseFailure{"no tool template"};
    } else {
      record = RunStage(StageKind::kToolParameterExtraction,
                        BuildParameterInstruction(instance, *spec), backend,
                        options.completion);
      if (record.backend_error) {
        record.parsed = ParseFailure{"backend error: " + *record.backend_error};
      } else {
        record.parsed = ExtractParameters(record.raw_output, *spec);
      }
    }
    if (const auto* p = std::get_if<ExtractedParams>(&record.parsed)) {
      params = p->values;
    } else {
      ready = false;
    }
    trace.stages.push_back(std::move(record));
  }

  if (ready) {
    try {
      trace.tool_result = Dispatch(spec->name, *trace.graph, params);
    } catch (const Error& e) {
      trace.tool_error = ToolFailure{e.code(), e.what()};
    }
  }
  return trace;
}

std::vector<PipelineTrace> RunPipelines(
    const std::vector<TaskInstance>& instances, LlmBackend& backend,
    const ToolRegistry& registry, const PipelineOptions& options,
    int workers) {
  std::vector<PipelineTrace> traces(instances.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) {
      traces[i] = RunPipeline(instances[i], backend, registry, options);
    }
  };
  const int n = std::max(1, std::min<int>(workers, static_cast<int>(instances.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  return traces;
}

}  // namespace graphtool
