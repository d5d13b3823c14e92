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

#include "graphtool/tool_registry.h"

#include <cctype>
#include <utility>

#include "graphtool/errors.h"
#include "graphtool/tools.h"

namespace graphtool {
namespace {

bool IsIdentifier(std::string_view s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

ToolSpec MakeSpec(ToolName tool, std::string description,
                  std::vector<ToolParameter> query, std::string returns) {
  ToolSpec spec;
  spec.name = std::string(ToolNameString(tool));
  spec.description = std::move(description);
  spec.parameters.push_back({"G", std::string(kGraphParameterType)});
  for (auto& p : query) spec.parameters.push_back(std::move(p));
  spec.returns = std::move(returns);
  return spec;
}

}  // namespace

std::vector<std::string> ToolSpec::QueryParameterNames() const {
  std::vector<std::string> names;
  for (const ToolParameter& p : parameters) {
    if (p.type != kGraphParameterType) names.push_back(p.name);
  }
  return names;
}

ToolRegistry ToolRegistry::Default() {
  ToolRegistry r;
  r.Add(MakeSpec(ToolName::kCycleDetection,
                 "Determine whether there exists any cycle in a given graph.",
                 {}, "boolean"));
  r.Add(MakeSpec(ToolName::kMaxTriangleSum,
                 "Find the triangle with the largest sum of edge weights in a "
                 "given undirected weighted graph and return that sum.",
                 {}, "integer"));
  r.Add(MakeSpec(ToolName::kEdgeCount,
                 "Count the total number of edges in a given graph.", {},
                 "integer"));
  r.Add(MakeSpec(ToolName::kNodeCount,
                 "Count the total number of nodes in a given graph.", {},
                 "integer"));
  r.Add(MakeSpec(ToolName::kTopologicalSort,
                 "Arrange the nodes of a given directed graph in topological "
                 "order.",
                 {}, "list of nodes"));
  r.Add(MakeSpec(ToolName::kDegreeCount,
                 "Count the number of edges connected to a specific node in a "
                 "given graph.",
                 {{"node", "node"}}, "integer"));
  r.Add(MakeSpec(ToolName::kEdgeExistence,
                 "Determine whether a specific edge exists between two nodes "
                 "in a given graph.",
                 {{"source", "node"}, {"target", "node"}}, "boolean"));
  r.Add(MakeSpec(ToolName::kNodeExistence,
                 "Determine whether a specific node exists in a given graph.",
                 {{"node", "node"}}, "boolean"));
  r.Add(MakeSpec(ToolName::kMaximumFlow,
                 "Determine the largest amount of flow from a source node to a "
                 "sink node in a given graph with edge capacities.",
                 {{"source", "node"}, {"target", "node"}}, "integer"));
  r.Add(MakeSpec(ToolName::kPathExistence,
                 "Determine whether a path exists from one node to another in "
                 "a given graph.",
                 {{"source", "node"}, {"target", "node"}}, "boolean"));
  r.Add(MakeSpec(ToolName::kShortestPath,
                 "Determine the minimum distance between two nodes in a given "
                 "weighted graph.",
                 {{"source", "node"}, {"target", "node"}}, "integer"));
  return r;
}

void ToolRegistry::Add(ToolSpec spec) {
  if (!IsIdentifier(spec.name)) {
    throw Error(ErrorCode::kInvalidArgument,
                "tool name '" + spec.name + "' is not an identifier");
  }
  if (Find(spec.name)) {
    throw Error(ErrorCode::kInvalidArgument,
                "tool '" + spec.name + "' is already registered");
  }
  for (const ToolParameter& p : spec.parameters) {
    if (!IsIdentifier(p.name)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "parameter name '" + p.name + "' of tool '" + spec.name +
                      "' is not an identifier");
    }
  }
  specs_.push_back(std::move(spec));
}

const ToolSpec* ToolRegistry::Find(std::string_view name) const {
  for (const ToolSpec& spec : specs_) {
    if (spec.name == name) return &spec;
  }
  return nullptr;
}

}  // namespace graphtool
