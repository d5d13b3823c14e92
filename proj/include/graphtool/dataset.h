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

#ifndef GRAPHTOOL_DATASET_H_
#define GRAPHTOOL_DATASET_H_

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "graphtool/pipeline.h"
#include "graphtool/prompts.h"
#include "graphtool/serialization.h"
#include "graphtool/tasks.h"

namespace graphtool {

struct DatasetEntry {
  std::string instruction;
  std::string input;
  std::string output;
  StageKind stage = StageKind::kGraphExtraction;
  std::string instance_id;
};

// True iff every stage label and the final answer match gold: graph
// (edge-level), tool name (trimmed, case-folded), parameters (parametric
// kinds only, order-sensitive) and the dispatched answer.
bool MatchingFunction(const PipelineTrace& trace, const TaskInstance& instance);

struct RetentionCounts {
  int instances = 0;  // corpus instances of this slice
  int traced = 0;     // instances with a trace
  int retained = 0;
};

struct DatasetStats {
  RetentionCounts total;
  int entries = 0;
  // Keyed by "<task kind>/<size class>".
  std::map<std::string, RetentionCounts> per_slice;

  Json ToJson() const;
};

struct DatasetResult {
  std::vector<DatasetEntry> entries;  // by instance id, then stage order
  DatasetStats stats;
};

// Keeps every stage of an instance that passes MatchingFunction and drops
// the others. Throws Error(kOrphanTrace) for traces without an instance and
// Error(kInvalidArgument) for duplicate traces.
DatasetResult BuildDataset(const std::vector<PipelineTrace>& traces,
                           const std::vector<TaskInstance>& corpus);

// A JSON array of {"instruction", "input", "output"} objects, UTF-8,
// written atomically. Invalid UTF-8 in model output becomes U+FFFD.
std::string RenderAlpaca(const std::vector<DatasetEntry>& entries);
void ExportAlpaca(const std::vector<DatasetEntry>& entries,
                  const std::filesystem::path& path);

}  // namespace graphtool

#endif  // GRAPHTOOL_DATASET_H_
