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

#include "graphtool/dataset.h"

#include <algorithm>
#include <cctype>
#include <unordered_map>

#include "graphtool/errors.h"
#include "graphtool/io.h"

namespace graphtool {
namespace {

std::string Folded(std::string_view name) {
  const auto first = name.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = name.find_last_not_of(" \t\r\n");
  std::string out(name.substr(first, last - first + 1));
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string SliceKey(const TaskInstance& inst) {
  return TaskKindName(inst.kind) + "/" + std::string(SizeClassName(inst.size_class));
}

Json CountsToJson(const RetentionCounts& c) {
  return {{"instances", c.instances},
          {"traced", c.traced},
          {"retained", c.retained},
          {"retention_rate",
           c.instances == 0 ? 0.0 : static_cast<double>(c.retained) / c.instances}};
}

}  // namespace

bool MatchingFunction(const PipelineTrace& trace, const TaskInstance& instance) {
  const std::size_t expected = instance.basic_analysis() ? 2 : 3;
  if (trace.stages.size() != expected) return false;
  for (const StageRecord& s : trace.stages) {
    if (IsParseFailure(s.parsed)) return false;
  }
  if (!trace.graph || !GraphsEqual(*trace.graph, instance.gold_graph)) {
    return false;
  }
  const StageRecord* name = trace.Stage(StageKind::kToolNameIdentification);
  const auto* extracted = name ? std::get_if<ExtractedName>(&name->parsed) : nullptr;
  if (!extracted || Folded(extracted->name) != ToolNameString(instance.gold_tool)) {
    return false;
  }
  if (!instance.basic_analysis()) {
    const StageRecord* p = trace.Stage(StageKind::kToolParameterExtraction);
    const auto* params = p ? std::get_if<ExtractedParams>(&p->parsed) : nullptr;
    if (!params || params->values != instance.gold_params) return false;
  }
  return trace.tool_result && *trace.tool_result == instance.gold_answer;
}

Json DatasetStats::ToJson() const {
  Json slices = Json::object();
  for (const auto& [key, counts] : per_slice) slices[key] = CountsToJson(counts);
  return {{"total", CountsToJson(total)},
          {"entries", entries},
          {"per_slice", std::move(slices)}};
}

DatasetResult BuildDataset(const std::vector<PipelineTrace>& traces,
                           const std::vector<TaskInstance>& corpus) {
  std::unordered_map<std::string, const TaskInstance*> by_id;
  by_id.reserve(corpus.size());
  DatasetResult result;
  for (const TaskInstance& inst : corpus) {
    by_id.emplace(inst.id, &inst);
    ++result.stats.total.instances;
    ++result.stats.per_slice[SliceKey(inst)].instances;
  }

  std::vector<const PipelineTrace*> ordered;
  ordered.reserve(traces.size());
  for (const PipelineTrace& trace : traces) {
    if (!by_id.count(trace.instance_id)) {
      throw Error(ErrorCode::kOrphanTrace,
                  "trace " + trace.instance_id + " has no corpus instance");
    }
    ordered.push_back(&trace);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const PipelineTrace* a, const PipelineTrace* b) {
              return a->instance_id < b->instance_id;
            });
  for (std::size_t i = 1; i < ordered.size(); ++i) {
    if (ordered[i]->instance_id == ordered[i - 1]->instance_id) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate trace for " + ordered[i]->instance_id);
    }
  }

  for (const PipelineTrace* trace : ordered) {
    const TaskInstance& inst = *by_id.at(trace->instance_id);
    RetentionCounts& slice = result.stats.per_slice[SliceKey(inst)];
    ++slice.traced;
    ++result.stats.total.traced;
    if (!MatchingFunction(*trace, inst)) continue;
    ++slice.retained;
    ++result.stats.total.retained;
    for (const StageRecord& s : trace->stages) {
      result.entries.push_back(
          {s.instruction_text, s.input, s.raw_output, s.stage, inst.id});
    }
  }
  result.stats.entries = static_cast<int>(result.entries.size());
  return result;
}

std::string RenderAlpaca(const std::vector<DatasetEntry>& entries) {
  Json array = Json::array();
  for (const DatasetEntry& e : entries) {
    array.push_back({{"instruction", e.instruction},
                     {"input", e.input},
                     {"output", e.output}});
  }
  return array.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

void ExportAlpaca(const std::vector<DatasetEntry>& entries,
                  const std::filesystem::path& path) {
  WriteFileAtomic(path, RenderAlpaca(entries));
}

}  // namespace graphtool
