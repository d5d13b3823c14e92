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

#ifndef GRAPHTOOL_PROMPTS_H_
#define GRAPHTOOL_PROMPTS_H_

#include <optional>
#include <string>
#include <string_view>

#include "graphtool/tasks.h"
#include "graphtool/tool_registry.h"

namespace graphtool {

enum class StageKind {
  kGraphExtraction,
  kToolNameIdentification,
  kToolParameterExtraction,
};

std::string_view StageKindName(StageKind stage);  // "graph" / "name" / "parameters"
std::optional<StageKind> ParseStageKind(std::string_view name);

inline constexpr std::string_view kGraphInstructionHeader =
    "### Graph-Instruction";
inline constexpr std::string_view kTaskInstructionHeader =
    "### Task-Instruction";
inline constexpr std::string_view kParameterInstructionHeader =
    "### Parameter-Instruction";
inline constexpr std::string_view kTaskIdLabel = "Task ID: ";

// A stage prompt: the instruction, the task it is applied to, and the text
// actually sent to the model (instruction, task id line, task, "Output:").
struct Prompt {
  std::string instruction;
  std::string input;
  std::string text;
};

// WL: two-shot edge-list extraction (one unweighted, one weighted shot).
// EL: one-shot file path extraction.
Prompt BuildGraphInstruction(const TaskInstance& instance);

// Every registered tool with its four attributes, plus the "API_name:"
// output constraint.
Prompt BuildTaskInstruction(const TaskInstance& instance,
                            const ToolRegistry& registry);

// The retrieved template and its "name=<int>, ..." answer format.
Prompt BuildParameterInstruction(const TaskInstance& instance,
                                 const ToolSpec& spec);

std::optional<std::string> FindTaskId(std::string_view prompt);
std::optional<StageKind> DetectStage(std::string_view prompt);

}  // namespace graphtool

#endif  // GRAPHTOOL_PROMPTS_H_
