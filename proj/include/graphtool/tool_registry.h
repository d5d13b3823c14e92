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

#ifndef GRAPHTOOL_TOOL_REGISTRY_H_
#define GRAPHTOOL_TOOL_REGISTRY_H_

#include <string>
#include <string_view>
#include <vector>

namespace graphtool {

inline constexpr std::string_view kGraphParameterType = "graph";

struct ToolParameter {
  std::string name;
  // Semantic type shown to the model: "graph", "node", ...
  std::string type;
};

// The four attributes a tool template exposes: name, description, ordered
// parameters (the graph first) and return type.
struct ToolSpec {
  std::string name;
  std::string description;
  std::vector<ToolParameter> parameters;
  std::string returns;

  // Parameter names other than the graph, in declaration order.
  std::vector<std::string> QueryParameterNames() const;
};

class ToolRegistry {
 public:
  // The eleven shipped tools.
  static ToolRegistry Default();

  // Throws Error(kInvalidArgument) on a duplicate name or a parameter name
  // that is not an identifier.
  void Add(ToolSpec spec);

  const std::vector<ToolSpec>& specs() const { return specs_; }

  // Exact lookup, no normalization.
  const ToolSpec* Find(std::string_view name) const;

 private:
  std::vector<ToolSpec> specs_;
};

}  // namespace graphtool

#endif  // GRAPHTOOL_TOOL_REGISTRY_H_
