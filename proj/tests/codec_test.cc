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

#include "graphtool/codec.h"

#include <fstream>
#include <random>

#include <gtest/gtest.h>

#include "oracles.h"
#include "test_util.h"

namespace graphtool {
namespace {

using testing::Directed;
using testing::Undirected;
using testing::Weighted;

const ToolSpec& Spec(std::string_view name) {
  static const ToolRegistry registry = ToolRegistry::Default();
  return *registry.Find(name);
}

std::vector<std::int64_t> Params(const ExtractionResult& r) {
  const auto* p = std::get_if<ExtractedParams>(&r);
  return p ? p->values : std::vector<std::int64_t>{-1};
}

TEST(RenderTest, EdgeListFormats) {
  EXPECT_EQ(RenderEdgeList(Undirected(3, {{0, 1}, {1, 2}})), "(0, 1), (1, 2)");
  EXPECT_EQ(RenderEdgeList(Weighted(false, 2, {{0, 1, 3}})),
            "(0, 1, {'weight': 3})");
  EXPECT_EQ(RenderEdgeList(Weighted(true, 2, {{0, 1, 7}}, WeightKind::kCapacity)),
            "(0, 1, {'capacity': 7})");
  EXPECT_EQ(RenderEdgeList(Undirected(1, {})), "");
}

TEST(RenderTest, NamedParameters) {
  const std::vector<std::string> names = {"source", "target"};
  const std::vector<std::int64_t> values = {3, 7};
  EXPECT_EQ(RenderNamedParameters(names, values), "source=3, target=7");
}

TEST(ExtractGraphTest, WeightedWithSurroundingProse) {
  const auto r = ExtractGraph(
      "Sure! [(0, 1, {'weight': 3}), (1, 2, {'weight': 5})] hope this helps",
      WeightKind::kWeight, false);
  const auto* g = std::get_if<ExtractedGraph>(&r);
  ASSERT_NE(g, nullptr);
  EXPECT_TRUE(GraphsEqual(g->graph, Weighted(false, 3, {{0, 1, 3}, {1, 2, 5}})));
}

TEST(ExtractGraphTest, NoMatchIsParseFailure) {
  EXPECT_TRUE(IsParseFailure(ExtractGraph("no edges here", WeightKind::kNone, false)));
  EXPECT_TRUE(IsParseFailure(ExtractGraph("", WeightKind::kNone, false)));
}

TEST(ExtractGraphTest, PatternsAreMutuallyExclusive) {
  const std::string weighted = "[(0, 1, {'weight': 3})]";
  const std::string capacity = "[(0, 1, {'capacity': 3})]";
  const std::string plain = "[(0, 1)]";
  EXPECT_TRUE(IsParseFailure(ExtractGraph(weighted, WeightKind::kNone, false)));
  EXPECT_TRUE(IsParseFailure(ExtractGraph(weighted, WeightKind::kCapacity, false)));
  EXPECT_TRUE(IsParseFailure(ExtractGraph(capacity, WeightKind::kWeight, false)));
  EXPECT_TRUE(IsParseFailure(ExtractGraph(plain, WeightKind::kWeight, false)));
}

TEST(ExtractGraphTest, InvalidGraphsAreParseFailures) {
  EXPECT_TRUE(IsParseFailure(ExtractGraph("[(1, 1)]", WeightKind::kNone, false)));
  EXPECT_TRUE(IsParseFailure(ExtractGraph("[(0, 1), (1, 0)]", WeightKind::kNone, false)));
  EXPECT_TRUE(IsParseFailure(
      ExtractGraph("[(0, 1, {'weight': 0})]", WeightKind::kWeight, false)));
  EXPECT_TRUE(IsParseFailure(
      ExtractGraph("[(0, 99999999999)]", WeightKind::kNone, false)));
}

TEST(ExtractGraphTest, DirectedKeepsOrientation) {
  const auto r = ExtractGraph("[(1, 0), (0, 1)]", WeightKind::kNone, true);
  const auto* g = std::get_if<ExtractedGraph>(&r);
  ASSERT_NE(g, nullptr);
  EXPECT_TRUE(GraphsEqual(g->graph, Directed(2, {{0, 1}, {1, 0}})));
}

TEST(ExtractToolNameTest, Anchor) {
  const auto name = [](std::string_view text) {
    const auto r = ExtractToolName(text);
    const auto* n = std::get_if<ExtractedName>(&r);
    return n ? n->name : std::string("<failure>");
  };
  EXPECT_EQ(name("API_name: shortest_path"), "shortest_path");
  EXPECT_EQ(name("The tool is\nAPI_name:   cycle_detection."), "cycle_detection");
  EXPECT_EQ(name("API_name:\n  edge_count"), "edge_count");
  EXPECT_EQ(name("I would call shortest_path"), "<failure>");
  EXPECT_EQ(name("API_name: banana"), "banana");
}

TEST(ExtractParametersTest, NamedForm) {
  EXPECT_EQ(Params(ExtractParameters("source=3, target=7", Spec("shortest_path"))),
            (std::vector<std::int64_t>{3, 7}));
  EXPECT_EQ(Params(ExtractParameters("source = 3 target = 7", Spec("shortest_path"))),
            (std::vector<std::int64_t>{3, 7}));
  EXPECT_EQ(Params(ExtractParameters("node=12", Spec("degree_count"))),
            (std::vector<std::int64_t>{12}));
}

TEST(ExtractParametersTest, NamedOrderIsSpecOrderNotTextOrder) {
  EXPECT_EQ(Params(ExtractParameters("target=7, source=3", Spec("shortest_path"))),
            (std::vector<std::int64_t>{3, 7}));
}

TEST(ExtractParametersTest, PositionalFallback) {
  EXPECT_EQ(Params(ExtractParameters("shortest_path(G, 4, 9)", Spec("shortest_path"))),
            (std::vector<std::int64_t>{4, 9}));
  EXPECT_EQ(Params(ExtractParameters("degree_count(G, 5)", Spec("degree_count"))),
            (std::vector<std::int64_t>{5}));
}

TEST(ExtractParametersTest, ArityAndMissingValues) {
  const auto missing = ExtractParameters("source=3", Spec("shortest_path"));
  ASSERT_TRUE(IsParseFailure(missing));
  EXPECT_NE(std::get<ParseFailure>(missing).reason.find("arity"), std::string::npos);
  EXPECT_TRUE(IsParseFailure(ExtractParameters("G, 1, 2, 3", Spec("degree_count"))));
  EXPECT_TRUE(IsParseFailure(ExtractParameters("nothing useful", Spec("degree_count"))));
  // The node parameter of degree_count does not satisfy shortest_path.
  EXPECT_TRUE(IsParseFailure(ExtractParameters("node=3", Spec("shortest_path"))));
  EXPECT_TRUE(Params(ExtractParameters("", Spec("edge_count"))).empty());
}

TEST(ExtractFilePathTest, FindsPath) {
  const auto path = [](std::string_view text) {
    const auto r = ExtractFilePath(text);
    const auto* p = std::get_if<ExtractedPath>(&r);
    return p ? p->path : std::string("<failure>");
  };
  EXPECT_EQ(path("Path: graphs/q00000001.edges"), "graphs/q00000001.edges");
  EXPECT_EQ(path("the file 'data/g.edges'."), "data/g.edges");
  EXPECT_EQ(path("Path: /abs/dir/x.edges\n"), "/abs/dir/x.edges");
  EXPECT_EQ(path("Path: graphs/x.edgesmore"), "<failure>");
  EXPECT_EQ(path("no path"), "<failure>");
}

TEST(ElGraphFileTest, RoundTrip) {
  const Graph g = Weighted(true, 4, {{0, 1, 3}, {2, 3, 4}, {1, 3, 9}}, WeightKind::kCapacity);
  const std::string text = FormatElGraph(g);
  EXPECT_EQ(text.substr(0, 9), "directed\n");
  EXPECT_TRUE(GraphsEqual(ParseElGraph(text, WeightKind::kCapacity), g));
  const Graph u = Undirected(3, {{0, 1}, {1, 2}});
  EXPECT_TRUE(GraphsEqual(ParseElGraph(FormatElGraph(u), WeightKind::kNone), u));
}

TEST(ElGraphFileTest, MalformedLinesNameTheLine) {
  const auto line_of = [](std::string_view text) -> std::string {
    try {
      ParseElGraph(text, WeightKind::kNone);
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kMalformedLine);
      return e.what();
    }
    return "<no error>";
  };
  EXPECT_NE(line_of("sideways\n0, 1\n").find("line 1"), std::string::npos);
  EXPECT_NE(line_of("undirected\n0, 1\n1, x\n").find("line 3"), std::string::npos);
  EXPECT_NE(line_of("undirected\n0, 1\n1, 2, 3\n").find("line 3"), std::string::npos);
  EXPECT_NE(line_of("undirected\n0, 1\n1, 0\n").find("line 3"), std::string::npos);
  EXPECT_NE(line_of("undirected\n2, 2\n").find("line 2"), std::string::npos);
  EXPECT_NE(line_of("").find("line 1"), std::string::npos);
}

TEST(ElGraphFileTest, FileIo) {
  testing::TempDir dir;
  const Graph g = Undirected(3, {{0, 1}, {1, 2}});
  WriteElGraphFile(g, dir.path() / "sub" / "g.edges");
  EXPECT_TRUE(GraphsEqual(ReadElGraphFile(dir.path() / "sub" / "g.edges", WeightKind::kNone), g));
  EXPECT_GT_ERROR(ReadElGraphFile(dir.path() / "missing.edges", WeightKind::kNone),
                  ErrorCode::kIoError);
}

// Round trip with prose on both sides and between the list brackets.
TEST(CodecPropertyTest, RenderExtractRoundTrip) {
  std::mt19937_64 rng(77);
  const char* prose[] = {"Here is the list: ", "Output:\n", "```python\n",
                         "edges = ", "The graph has these edges -> "};
  for (WeightKind kind : {WeightKind::kNone, WeightKind::kWeight, WeightKind::kCapacity}) {
    for (int i = 0; i < 150; ++i) {
      const bool directed = i % 2 == 0;
      const Graph g = oracle::RandomGraph(rng, directed, 2 + i % 12, 0.3, kind, 1000);
      if (g.edge_count() == 0) continue;
      const std::string text = std::string(prose[i % 5]) + "[" + RenderEdgeList(g) +
                               "]\nLet me know if you need more.";
      const auto r = ExtractGraph(text, kind, directed);
      const auto* out = std::get_if<ExtractedGraph>(&r);
      ASSERT_NE(out, nullptr) << text;
      EXPECT_TRUE(GraphsEqual(out->graph, g)) << text;
    }
  }
}

TEST(CodecPropertyTest, NamedParametersRoundTripInAnyOrder) {
  std::mt19937_64 rng(78);
  const ToolSpec& spec = Spec("maximum_flow");
  for (int i = 0; i < 100; ++i) {
    const std::vector<std::int64_t> values = {static_cast<std::int64_t>(rng() % 100),
                                              static_cast<std::int64_t>(rng() % 100)};
    const std::string forward = "source=" + std::to_string(values[0]) +
                                ", target=" + std::to_string(values[1]);
    const std::string backward = "target=" + std::to_string(values[1]) +
                                 ", source=" + std::to_string(values[0]);
    EXPECT_EQ(Params(ExtractParameters(forward, spec)), values);
    EXPECT_EQ(Params(ExtractParameters(backward, spec)), values);
  }
}

}  // namespace
}  // namespace graphtool
