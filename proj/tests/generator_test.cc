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

#include "graphtool/generator.h"

#include <map>
#include <set>

#include <gtest/gtest.h>

#include "graphtool/codec.h"
#include "graphtool/serialization.h"
#include "graphtool/tools.h"
#include "test_util.h"

namespace graphtool {
namespace {

using testing::SmallCorpus;

std::string Serialize(const std::vector<TaskInstance>& corpus) {
  std::string out;
  for (const TaskInstance& inst : corpus) out += InstanceToJson(inst).dump() + "\n";
  return out;
}

class GeneratedCorpusTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    corpus_ = new std::vector<TaskInstance>(
        SmallCorpus(10, {SizeClass::kWithinLimit, SizeClass::kExceedsLimit}, 3));
  }
  static void TearDownTestSuite() { delete corpus_; }
  static const std::vector<TaskInstance>& corpus() { return *corpus_; }

 private:
  static std::vector<TaskInstance>* corpus_;
};

std::vector<TaskInstance>* GeneratedCorpusTest::corpus_ = nullptr;

TEST_F(GeneratedCorpusTest, CountsAndSequentialIds) {
  ASSERT_EQ(corpus().size(), 400u);
  for (std::size_t i = 0; i < corpus().size(); ++i) {
    EXPECT_EQ(corpus()[i].id, InstanceId(static_cast<std::int64_t>(i)));
  }
}

TEST_F(GeneratedCorpusTest, SizeBoundsAndNoIsolatedNodes) {
  for (const TaskInstance& inst : corpus()) {
    const SizeBounds b = BoundsFor(inst.size_class);
    const Graph& g = inst.graph;
    EXPECT_GE(g.node_count(), b.min_nodes) << inst.id;
    EXPECT_LE(g.node_count(), b.max_nodes) << inst.id;
    EXPECT_LE(static_cast<int>(g.edge_count()), b.max_edges) << inst.id;
    EXPECT_EQ(g.directed(), inst.kind.directed);
    EXPECT_EQ(g.weight_kind(), ToolWeightKind(inst.kind.tool));
    for (NodeId u = 0; u < g.node_count(); ++u) {
      EXPECT_GT(g.Neighbors(u).size() + g.InDegree(u), 0u) << inst.id << " node " << u;
    }
    if (inst.size_class == SizeClass::kWithinLimit) {
      EXPECT_EQ(ClassifySize(inst.task_text, 4096), SizeClass::kWithinLimit);
      EXPECT_FALSE(inst.graph_file.has_value());
    } else {
      ASSERT_TRUE(inst.graph_file.has_value());
      EXPECT_EQ(*inst.graph_file, "graphs/" + inst.id + ".edges");
    }
  }
}

TEST_F(GeneratedCorpusTest, BooleanKindsAreBalanced) {
  std::map<std::string, std::pair<int, int>> tally;
  for (const TaskInstance& inst : corpus()) {
    if (const auto* b = std::get_if<BoolAnswer>(&inst.gold_answer)) {
      auto& [yes, total] = tally[TaskKindName(inst.kind) +
                                 std::string(SizeClassName(inst.size_class))];
      yes += b->value;
      ++total;
    }
  }
  EXPECT_EQ(tally.size(), 16u);
  for (const auto& [slice, counts] : tally) {
    EXPECT_EQ(2 * counts.first, counts.second) << slice;
  }
}

TEST_F(GeneratedCorpusTest, StructuralGuarantees) {
  for (const TaskInstance& inst : corpus()) {
    if (inst.kind.tool == ToolName::kTopologicalSort) {
      EXPECT_TRUE(HasUniqueTopologicalOrder(inst.graph)) << inst.id;
    }
    if (inst.kind.tool == ToolName::kMaxTriangleSum) {
      EXPECT_NO_THROW(MaxTriangleSum(inst.graph)) << inst.id;
    }
  }
}

TEST_F(GeneratedCorpusTest, GoldLabelsAreConsistent) {
  for (const TaskInstance& inst : corpus()) {
    EXPECT_EQ(inst.gold_tool, inst.kind.tool);
    EXPECT_EQ(inst.gold_params, inst.params);
    EXPECT_TRUE(GraphsEqual(inst.gold_graph, inst.graph));
    EXPECT_EQ(Dispatch(inst.gold_tool, inst.graph, inst.gold_params), inst.gold_answer);
    EXPECT_EQ(static_cast<int>(inst.params.size()), ToolArity(inst.kind.tool));
  }
}

TEST_F(GeneratedCorpusTest, TaskTextCarriesQueryButNoLabels) {
  std::map<std::string, std::set<int>> variants;
  for (const TaskInstance& inst : corpus()) {
    variants[TaskKindName(inst.kind)].insert(inst.description_variant);
    EXPECT_EQ(inst.task_text.find(ToolNameString(inst.kind.tool)), std::string::npos)
        << inst.task_text;
    EXPECT_EQ(inst.task_text.find("API_name"), std::string::npos);
    EXPECT_EQ(inst.task_text.find('='), std::string::npos) << inst.task_text;
    for (std::int64_t p : inst.params) {
      EXPECT_NE(inst.task_text.find("node " + std::to_string(p)), std::string::npos)
          << inst.task_text;
    }
    if (inst.graph_file) {
      EXPECT_NE(inst.task_text.find(*inst.graph_file), std::string::npos);
    } else if (inst.graph.edge_count() > 0) {
      EXPECT_NE(inst.task_text.find(RenderEdgeList(inst.graph)), std::string::npos);
    }
  }
  for (const auto& [kind, seen] : variants) EXPECT_EQ(seen.size(), 5u) << kind;
}

TEST(GeneratorTest, SeededRegenerationIsByteIdentical) {
  const auto a = SmallCorpus(4, {SizeClass::kWithinLimit, SizeClass::kExceedsLimit}, 9);
  const auto b = SmallCorpus(4, {SizeClass::kWithinLimit, SizeClass::kExceedsLimit}, 9);
  EXPECT_EQ(Serialize(a), Serialize(b));
  const auto c = SmallCorpus(4, {SizeClass::kWithinLimit, SizeClass::kExceedsLimit}, 10);
  EXPECT_NE(Serialize(a), Serialize(c));
}

TEST(GeneratorTest, WorkerCountDoesNotChangeOutput) {
  GenConfig config;
  config.count_per_kind = 3;
  config.seed = 4;
  std::vector<TaskInstance> one, many;
  GenerateCorpus(config, [&](TaskInstance&& i) { one.push_back(std::move(i)); }, 1);
  GenerateCorpus(config, [&](TaskInstance&& i) { many.push_back(std::move(i)); }, 4);
  EXPECT_EQ(Serialize(one), Serialize(many));
}

TEST(GeneratorTest, InstanceDependsOnlyOnItsCoordinates) {
  GenConfig config;
  const TaskKind kind{ToolName::kShortestPath, true};
  Rng a(InstanceSeed(5, kind, SizeClass::kWithinLimit, 7));
  Rng b(InstanceSeed(5, kind, SizeClass::kWithinLimit, 7));
  const auto x = GenerateInstance(kind, SizeClass::kWithinLimit, 7, "q1", config, a);
  const auto y = GenerateInstance(kind, SizeClass::kWithinLimit, 7, "q1", config, b);
  EXPECT_EQ(InstanceToJson(x).dump(), InstanceToJson(y).dump());
  EXPECT_NE(InstanceSeed(5, kind, SizeClass::kWithinLimit, 7),
            InstanceSeed(5, kind, SizeClass::kWithinLimit, 8));
  EXPECT_NE(InstanceSeed(5, kind, SizeClass::kWithinLimit, 7),
            InstanceSeed(5, kind, SizeClass::kExceedsLimit, 7));
}

TEST(GeneratorTest, InvalidKindIsRejected) {
  GenConfig config;
  Rng rng(1);
  EXPECT_GT_ERROR(GenerateInstance({ToolName::kMaxTriangleSum, true},
                                   SizeClass::kWithinLimit, 0, "q", config, rng),
                  ErrorCode::kInvalidArgument);
}

TEST(GeneratorTest, TokenEstimateAndClassification) {
  EXPECT_EQ(EstimateTokens(""), 0);
  EXPECT_EQ(EstimateTokens("abcd"), 1);
  EXPECT_EQ(EstimateTokens("abcde"), 2);
  EXPECT_EQ(ClassifySize(std::string(4096 * 4, 'x'), 4096), SizeClass::kWithinLimit);
  EXPECT_EQ(ClassifySize(std::string(4096 * 4 + 1, 'x'), 4096), SizeClass::kExceedsLimit);
  EXPECT_GT_ERROR(ClassifySize("x", 0), ErrorCode::kInvalidArgument);
}

TEST(GeneratorTest, DistributionHelpers) {
  Rng rng(3);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto v = UniformInt(rng, -2, 2);
    ASSERT_GE(v, -2);
    ASSERT_LE(v, 2);
    seen.insert(v);
    const double u = UniformUnit(rng);
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  EXPECT_EQ(seen.size(), 5u);
  EXPECT_FALSE(Bernoulli(rng, 0.0));
  EXPECT_TRUE(Bernoulli(rng, 1.0));
  EXPECT_EQ(InstanceId(42), "q00000042");
}

}  // namespace
}  // namespace graphtool
