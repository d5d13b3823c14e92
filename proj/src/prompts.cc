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

#include "graphtool/prompts.h"

#include <utility>

#include "graphtool/codec.h"

namespace graphtool {
namespace {

constexpr std::string_view kWithinLimitGraphInstruction =
    R"(You are given a graph reasoning task. Extract the structure of the graph described in the task and write it as a Python list of edges in NetworkX format.
Write an unweighted edge as (u, v), a weighted edge as (u, v, {'weight': w}) and an edge of a flow network as (u, v, {'capacity': c}).
Copy every edge exactly once, keep the node numbers unchanged and output only the edge list.

Example 1:
Task: Given an undirected graph with edges (0, 1), (1, 2), (2, 0), (2, 3), determine whether the graph contains a cycle.
Output: [(0, 1), (1, 2), (2, 0), (2, 3)]

Example 2:
Task: Given a directed weighted graph with edges (0, 1, {'weight': 4}), (1, 2, {'weight': 7}), (0, 2, {'weight': 12}), what is the length of the shortest path from node 0 to node 2?
Output: [(0, 1, {'weight': 4}), (1, 2, {'weight': 7}), (0, 2, {'weight': 12})]

Now extract the graph of the following task.)";

constexpr std::string_view kExceedsLimitGraphInstruction =
    R"(You are given a graph reasoning task. The graph is too large to be written in the task, so its edge list is stored in a file and the task gives the path of that file.
Identify the file path and output it as "Path: <file path>". Output only the path.

Example:
Task: Consider a directed graph whose edge list is stored in the file data/graphs/example.edges. Count the total number of edges.
Output: Path: data/graphs/example.edges

Now extract the file path of the following task.)";

std::string AssemblePrompt(std::string_view instruction,
                           const TaskInstance& instance) {
  std::string text(instruction);
  text += "\n\n";
  text += kTaskIdLabel;
  text += instance.id;
  text += "\nTask: ";
  text += instance.task_text;
  text += "\nOutput:";
  return text;
}

std::string ParameterList(const ToolSpec& spec) {
  std::string out;
  for (std::size_t i = 0; i < spec.parameters.size(); ++i) {
    if (i) out += ", ";
    out += spec.parameters[i].name + " (" + spec.parameters[i].type + ")";
  }
  return out;
}

std::string_view Line(std::string_view text, std::size_t from) {
  const auto end = text.find('\n', from);
  return text.substr(from, end == std::string_view::npos ? end : end - from);
}

}  // namespace

std::string_view StageKindName(StageKind stage) {
  switch (stage) {
    case StageKind::kGraphExtraction: return "graph";
    case StageKind::kToolNameIdentification: return "name";
    case StageKind::kToolParameterExtraction: return "parameters";
  }
  return "graph";
}

std::optional<StageKind> ParseStageKind(std::string_view name) {
  if (name == "graph") return StageKind::kGraphExtraction;
  if (name == "name") return StageKind::kToolNameIdentification;
  if (name == "parameters") return StageKind::kToolParameterExtraction;
  return std::nullopt;
}

Prompt BuildGraphInstruction(const TaskInstance& instance) {
  Prompt p;
  p.instruction = std::string(kGraphInstructionHeader) + "\n";
  p.instruction += instance.size_class == SizeClass::kWithinLimit
                       ? kWithinLimitGraphInstruction
                       : kExceedsLimitGraphInstruction;
  p.input = instance.task_text;
  p.text = AssemblePrompt(p.instruction, instance);
  return p;
}

Prompt BuildTaskInstruction(const TaskInstance& instance,
                            const ToolRegistry& registry) {
  Prompt p;
  p.instruction = std::string(kTaskInstructionHeader) + "\n";
  p.instruction +=
      "You are given a graph reasoning task and the following set of graph "
      "tools.\n\n";
  int index = 1;
  for (const ToolSpec& spec : registry.specs()) {
    p.instruction += std::to_string(index++) + ". Tool name: " + spec.name + "\n";
    p.instruction += "   Tool description: " + spec.description + "\n";
    p.instruction += "   Tool parameters: " + ParameterList(spec) + "\n";
    p.instruction += "   Return type: " + spec.returns + "\n";
  }
  p.instruction +=
      "\nSelect the one tool that solves the task. The graph is handled "
      "separately; do not repeat it and do not solve the task yourself.\n"
      "Answer in exactly this format:\nAPI_name: <tool name>";
  p.input = instance.task_text;
  p.text = AssemblePrompt(p.instruction, instance);
  return p;
}

Prompt BuildParameterInstruction(const TaskInstance& instance,
                                 const ToolSpec& spec) {
  const std::vector<std::string> names = spec.QueryParameterNames();
  Prompt p;
  p.instruction = std::string(kParameterInstructionHeader) + "\n";
  p.instruction += "The tool selected for the task is " + spec.name + ".\n";
  p.instruction += "Tool description: " + spec.description + "\n";
  p.instruction += "Tool parameters: " + ParameterList(spec) + "\n";
  p.instruction += "Return type: " + spec.returns + "\n\n";
  if (names.empty()) {
    p.instruction +=
        "This tool needs no parameters besides the graph G. Answer with an "
        "empty line.";
  } else {
    std::string format;
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (i) format += ", ";
      format += names[i] + "=<int>";
    }
    p.instruction +=
        "The graph G is already known. Extract the values of the remaining "
        "parameters from the task, keeping them in the order listed above.\n"
        "Answer in exactly this format:\n" +
        format;
  }
  p.input = instance.task_text;
  p.text = AssemblePrompt(p.instruction, instance);
  return p;
}

std::optional<std::string> FindTaskId(std::string_view prompt) {
  const auto pos = prompt.rfind(kTaskIdLabel);
  if (pos == std::string_view::npos) return std::nullopt;
  const std::string_view id = Line(prompt, pos + kTaskIdLabel.size());
  if (id.empty()) return std::nullopt;
  return std::string(id);
}

std::optional<StageKind> DetectStage(std::string_view prompt) {
  const std::string_view first = Line(prompt, 0);
  if (first == kGraphInstructionHeader) return StageKind::kGraphExtraction;
  if (first == kTaskInstructionHeader) return StageKind::kToolNameIdentification;
  if (first == kParameterInstructionHeader) {
    return StageKind::kToolParameterExtraction;
  }
  return std::nullopt;
}

}  // namespace graphtool
