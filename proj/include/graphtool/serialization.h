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

#ifndef GRAPHTOOL_SERIALIZATION_H_
#define GRAPHTOOL_SERIALIZATION_H_

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "graphtool/backend.h"
#include "graphtool/codec.h"
#include "graphtool/graph.h"
#include "graphtool/pipeline.h"
#include "graphtool/tasks.h"
#include "graphtool/tools.h"

namespace graphtool {

using Json = nlohmann::ordered_json;

// Decoders throw Error(kMalformedLine) on schema violations.
Json GraphToJson(const Graph& g);
Graph GraphFromJson(const Json& j);

Json AnswerToJson(const Answer& answer);
Answer AnswerFromJson(const Json& j);

Json ExtractionToJson(const ExtractionResult& result);
ExtractionResult ExtractionFromJson(const Json& j);

Json InstanceToJson(const TaskInstance& instance);
TaskInstance InstanceFromJson(const Json& j);

Json TraceToJson(const PipelineTrace& trace);
PipelineTrace TraceFromJson(const Json& j);

Json FaultLabelToJson(const FaultLabel& label);
FaultLabel FaultLabelFromJson(const Json& j);

// One compact JSON document per line, written atomically.
void WriteJsonl(const std::filesystem::path& path,
                const std::vector<Json>& rows);
// Blank lines are skipped; errors name the file and line.
std::vector<Json> ReadJsonl(const std::filesystem::path& path);

void WriteCorpus(const std::filesystem::path& path,
                 const std::vector<TaskInstance>& instances);
std::vector<TaskInstance> ReadCorpus(const std::filesystem::path& path);

void WriteTraces(const std::filesystem::path& path,
                 const std::vector<PipelineTrace>& traces);
std::vector<PipelineTrace> ReadTraces(const std::filesystem::path& path);

void WriteFaultLabels(const std::filesystem::path& path,
                      const std::vector<FaultLabel>& labels);
std::vector<FaultLabel> ReadFaultLabels(const std::filesystem::path& path);

}  // namespace graphtool

#endif  // GRAPHTOOL_SERIALIZATION_H_
