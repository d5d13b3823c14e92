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

#include "graphtool/tasks.h"

#include "graphtool/errors.h"

namespace graphtool {

bool IsValidKind(const TaskKind& kind) {
  if (kind.tool == ToolName::kMaxTriangleSum) return !kind.directed;
  if (kind.tool == ToolName::kTopologicalSort) return kind.directed;
  return true;
}

const std::vector<TaskKind>& AllTaskKinds() {
  static const std::vector<TaskKind> kinds = [] {
    std::vector<TaskKind> out;
    for (ToolName tool : kAllTools) {
      for (bool directed : {true, false}) {
        TaskKind kind{tool, directed};
        if (IsValidKind(kind)) out.push_back(kind);
      }
    }
    return out;
  }();
  return kinds;
}

std::string TaskKindName(const TaskKind& kind) {
  return std::string(ToolNameString(kind.tool)) +
         (kind.directed ? "/directed" : "/undirected");
}

std::optional<TaskKind> ParseTaskKind(std::string_view name) {
  const auto slash = name.find('/');
  if (slash == std::string_view::npos) return std::nullopt;
  const auto tool = ParseToolName(name.substr(0, slash));
  const auto type = name.substr(slash + 1);
  if (!tool || (type != "directed" && type != "undirected")) {
    return std::nullopt;
  }
  TaskKind kind{*tool, type == "directed"};
  if (!IsValidKind(kind)) return std::nullopt;
  return kind;
}

std::string_view SizeClassName(SizeClass size) {
  return size == SizeClass::kWithinLimit ? "WL" : "EL";
}

std::optional<SizeClass> ParseSizeClass(std::string_view name) {
  if (name == "WL" || name == "wl") return SizeClass::kWithinLimit;
  if (name == "EL" || name == "el") return SizeClass::kExceedsLimit;
  return std::nullopt;
}

SizeBounds BoundsFor(SizeClass size) {
  if (size == SizeClass::kWithinLimit) return {2, 40, 300};
  return {41, 100, 1000};
}

void GenConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, "invalid generator config: " + what);
  };
  if (count_per_kind < 0) fail("count_per_kind must be >= 0");
  if (!(edge_probability_min > 0.0) || edge_probability_max > 1.0 ||
      edge_probability_min > edge_probability_max) {
    fail("edge probability range must lie in (0, 1]");
  }
  if (weight_min < 1 || weight_max < weight_min) {
    fail("weight range must satisfy 1 <= min <= max");
  }
  if (token_budget <= 0) fail("token_budget must be positive");
  if (retry_cap <= 0) fail("retry_cap must be positive");
  for (const TaskKind& kind : kinds) {
    if (!IsValidKind(kind)) fail("invalid task kind " + TaskKindName(kind));
  }
}

}  // namespace graphtool
