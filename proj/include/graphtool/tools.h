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

#ifndef GRAPHTOOL_TOOLS_H_
#define GRAPHTOOL_TOOLS_H_

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graphtool/graph.h"

namespace graphtool {

enum class ToolName {
  kCycleDetection,
  kMaxTriangleSum,
  kEdgeCount,
  kNodeCount,
  kTopologicalSort,
  kDegreeCount,
  kEdgeExistence,
  kNodeExistence,
  kMaximumFlow,
  kPathExistence,
  kShortestPath,
};

inline constexpr std::array<ToolName, 11> kAllTools = {
    ToolName::kCycleDetection,  ToolName::kMaxTriangleSum,
    ToolName::kEdgeCount,       ToolName::kNodeCount,
    ToolName::kTopologicalSort, ToolName::kDegreeCount,
    ToolName::kEdgeExistence,   ToolName::kNodeExistence,
    ToolName::kMaximumFlow,     ToolName::kPathExistence,
    ToolName::kShortestPath,
};

std::string_view ToolNameString(ToolName tool);
std::optional<ToolName> ParseToolName(std::string_view name);

// Basic graph analysis tools take only the graph; the rest are parametric
// queries.
bool IsBasicAnalysisTool(ToolName tool);
// Number of parameters besides the graph.
int ToolArity(ToolName tool);
// Edge annotation the tool's graphs carry.
WeightKind ToolWeightKind(ToolName tool);

struct BoolAnswer {
  bool value = false;
  friend bool operator==(const BoolAnswer&, const BoolAnswer&) = default;
};
struct CountAnswer {
  std::int64_t value = 0;
  friend bool operator==(const CountAnswer&, const CountAnswer&) = default;
};
struct NodeSeqAnswer {
  std::vector<NodeId> value;
  friend bool operator==(const NodeSeqAnswer&, const NodeSeqAnswer&) = default;
};
struct ValueAnswer {
  std::int64_t value = 0;
  friend bool operator==(const ValueAnswer&, const ValueAnswer&) = default;
};

using Answer = std::variant<BoolAnswer, CountAnswer, NodeSeqAnswer, ValueAnswer>;

std::string AnswerToString(const Answer& answer);

bool CycleDetection(const Graph& g);
std::int64_t MaxTriangleSum(const Graph& g);
std::int64_t EdgeCount(const Graph& g);
std::int64_t NodeCount(const Graph& g);
std::vector<NodeId> TopologicalSort(const Graph& g);
std::int64_t DegreeCount(const Graph& g, std::int64_t node);
bool EdgeExistence(const Graph& g, std::int64_t u, std::int64_t v);
bool NodeExistence(const Graph& g, std::int64_t node);
std::int64_t MaximumFlow(const Graph& g, std::int64_t source,
                         std::int64_t sink);
bool PathExistence(const Graph& g, std::int64_t u, std::int64_t v);
std::int64_t ShortestPath(const Graph& g, std::int64_t u, std::int64_t v);

// True iff Kahn's algorithm finds exactly one zero in-degree node at every
// step, i.e. the directed graph is acyclic with a unique topological order.
bool HasUniqueTopologicalOrder(const Graph& g);

// Runs the named tool. Throws Error(kArityMismatch) when `params` does not
// have the tool's arity, plus whatever the tool itself throws.
Answer Dispatch(ToolName tool, const Graph& g,
                std::span<const std::int64_t> params);
// String form; throws Error(kUnknownTool) for unregistered names.
Answer Dispatch(std::string_view tool, const Graph& g,
                std::span<const std::int64_t> params);

}  // namespace graphtool

#endif  // GRAPHTOOL_TOOLS_H_
