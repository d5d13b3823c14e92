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

#ifndef GRAPHTOOL_CODEC_H_
#define GRAPHTOOL_CODEC_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "graphtool/graph.h"
#include "graphtool/tool_registry.h"

namespace graphtool {

// Regular-expression sources of the extraction layer (ECMAScript syntax).
//
// The published graph patterns open with a stray "$" and leave the edge
// parentheses unescaped. Here the "$" is dropped and the pattern anchors on
// the literal "(...)" around each edge, which keeps the three graph patterns
// mutually exclusive on well-formed renders. The tool-name pattern drops a
// trailing quote.
namespace patterns {

inline constexpr std::string_view kUnweightedEdge = R"(\((\d+), (\d+)\))";
inline constexpr std::string_view kWeightedEdge =
    R"(\((\d+), (\d+), \{'weight':\s*(\d+)\}\))";
inline constexpr std::string_view kCapacityEdge =
    R"(\((\d+), (\d+), \{'capacity':\s*(\d+)\}\))";
inline constexpr std::string_view kToolName = R"(API_name:\s*(\w+|\n\s*\w+))";
inline constexpr std::string_view kFilePath =
    R"(([^\s'"`()\[\]<>,;]*[/\\][^\s'"`()\[\]<>,;]*?\.edges)(?![A-Za-z0-9_]))";

// Named template: name1\s*=\s*(\d+)[,\s]*name2\s*=\s*(\d+)...
std::string NamedParameters(std::span<const std::string> names);
// Positional fallback: G,\s*(\d+),\s*(\d+)... not followed by another value.
std::string PositionalParameters(int arity);

std::string_view EdgePattern(WeightKind kind);

}  // namespace patterns

inline constexpr std::string_view kGraphFileExtension = ".edges";

struct ExtractedGraph {
  Graph graph;
};
struct ExtractedName {
  std::string name;
};
struct ExtractedParams {
  std::vector<std::int64_t> values;
};
struct ExtractedPath {
  std::string path;
};
struct ParseFailure {
  std::string reason;
};

// Extraction failures are values so they can be scored downstream.
using ExtractionResult = std::variant<ExtractedGraph, ExtractedName,
                                      ExtractedParams, ExtractedPath,
                                      ParseFailure>;

inline bool IsParseFailure(const ExtractionResult& r) {
  return std::holds_alternative<ParseFailure>(r);
}

// "(0, 1), (1, 2)" / "(0, 1, {'weight': 3})" / "(0, 1, {'capacity': 7})"
std::string RenderEdgeList(const Graph& g);

// "source=3, target=7"
std::string RenderNamedParameters(std::span<const std::string> names,
                                  std::span<const std::int64_t> values);

// Collects every edge match of the pattern selected by `kind`, in order,
// and rebuilds the graph with node_count = max id + 1.
ExtractionResult ExtractGraph(std::string_view text, WeightKind kind,
                              bool directed);

ExtractionResult ExtractToolName(std::string_view text);

// Named template in spec order first, then each name on its own (values are
// still returned in spec order), then the positional "G, a, b" form.
ExtractionResult ExtractParameters(std::string_view text, const ToolSpec& spec);

// First path-shaped token ending in kGraphFileExtension.
ExtractionResult ExtractFilePath(std::string_view text);

// EL graph file: first line "directed" or "undirected", then one edge per
// line as "u, v" or "u, v, w".
std::string FormatElGraph(const Graph& g);
// Weighted files produce `weighted_as` (kWeight when given kNone). Throws
// Error(kMalformedLine) naming the 1-based line.
Graph ParseElGraph(std::string_view contents, WeightKind weighted_as);
// Throws Error(kIoError) or Error(kMalformedLine).
Graph ReadElGraphFile(const std::filesystem::path& path,
                      WeightKind weighted_as);
void WriteElGraphFile(const Graph& g, const std::filesystem::path& path);

}  // namespace graphtool

#endif  // GRAPHTOOL_CODEC_H_
