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

#ifndef GRAPHTOOL_TASKS_H_
#define GRAPHTOOL_TASKS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphtool/graph.h"
#include "graphtool/tools.h"

namespace graphtool {

// A tool paired with a graph type. Triangle sums exist only on undirected
// graphs and topological sorts only on directed ones, leaving 20 kinds.
struct TaskKind {
  ToolName tool = ToolName::kCycleDetection;
  bool directed = false;

  friend auto operator<=>(const TaskKind&, const TaskKind&) = default;
};

bool IsValidKind(const TaskKind& kind);
const std::vector<TaskKind>& AllTaskKinds();
// "shortest_path/directed"
std::string TaskKindName(const TaskKind& kind);
std::optional<TaskKind> ParseTaskKind(std::string_view name);

enum class SizeClass { kWithinLimit, kExceedsLimit };

std::string_view SizeClassName(SizeClass size);  // "WL" / "EL"
std::optional<SizeClass> ParseSizeClass(std::string_view name);

inline constexpr int kDescriptionVariants = 5;

struct TaskInstance {
  std::string id;
  TaskKind kind;
  Graph graph;
  std::vector<std::int64_t> params;
  int description_variant = 0;
  SizeClass size_class = SizeClass::kWithinLimit;
  std::string task_text;
  // Set for EL instances; relative paths resolve against the corpus root.
  std::optional<std::string> graph_file;
  Graph gold_graph;
  ToolName gold_tool = ToolName::kCycleDetection;
  std::vector<std::int64_t> gold_params;
  Answer gold_answer;

  bool basic_analysis() const { return IsBasicAnalysisTool(kind.tool); }
};

struct GenConfig {
  std::vector<TaskKind> kinds = AllTaskKinds();
  std::vector<SizeClass> sizes = {SizeClass::kWithinLimit};
  int count_per_kind = 2000;
  std::uint64_t seed = 0;
  double edge_probability_min = 0.1;
  double edge_probability_max = 0.6;
  int weight_min = 1;
  int weight_max = 10;
  int token_budget = 4096;
  int retry_cap = 10000;
  // Directory, relative to the corpus root, that EL graph files live in.
  std::string graph_dir = "graphs";

  // Throws Error(kInvalidArgument) on out-of-range fields.
  void Validate() const;
};

struct SizeBounds {
  int min_nodes;
  int max_nodes;
  int max_edges;
};

SizeBounds BoundsFor(SizeClass size);

}  // namespace graphtool

#endif  // GRAPHTOOL_TASKS_H_
