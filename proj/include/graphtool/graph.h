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

#ifndef GRAPHTOOL_GRAPH_H_
#define GRAPHTOOL_GRAPH_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace graphtool {

// Nodes are dense ids 0..node_count-1.
using NodeId = int;

enum class WeightKind { kNone, kWeight, kCapacity };

std::string_view WeightKindName(WeightKind kind);
std::optional<WeightKind> ParseWeightKind(std::string_view name);

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  std::optional<int> weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// An edge normalized for set comparison. Undirected edges store
// (min, max); `weight` is 0 for unweighted graphs.
struct CanonicalEdge {
  NodeId u = 0;
  NodeId v = 0;
  int weight = 0;

  friend auto operator<=>(const CanonicalEdge&, const CanonicalEdge&) = default;
};

using CanonicalEdgeSet = std::set<CanonicalEdge>;

// An immutable, validated simple graph: no self-loops, no multi-edges and
// weights present on every edge iff weight_kind != kNone.
class Graph {
 public:
  // Throws Error(kInvalidEdge) for out-of-range ids, self-loops and
  // duplicates, Error(kWeightMismatch) when weights disagree with `kind`.
  static Graph Build(bool directed, int node_count, std::vector<Edge> edges,
                     WeightKind kind);

  // Reconstruction from a bare edge list: node_count = max id + 1 and the
  // graph remembers that its node count was inferred.
  static Graph FromEdgeList(bool directed, std::vector<Edge> edges,
                            WeightKind kind);

  Graph() = default;

  bool directed() const { return directed_; }
  int node_count() const { return node_count_; }
  WeightKind weight_kind() const { return weight_kind_; }
  bool weighted() const { return weight_kind_ != WeightKind::kNone; }
  bool node_count_inferred() const { return node_count_inferred_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool HasNode(std::int64_t node) const {
    return node >= 0 && node < node_count_;
  }
  // Honors direction for directed graphs.
  bool HasEdge(NodeId u, NodeId v) const;

  // Out-neighbours (directed) or neighbours (undirected), paired with the
  // index of the connecting edge in edges().
  struct Arc {
    NodeId to;
    int edge_index;
  };
  const std::vector<Arc>& Neighbors(NodeId u) const { return adjacency_[u]; }
  int InDegree(NodeId u) const { return in_degree_[u]; }

  // 1 + the largest id referenced by an edge; 0 for an edgeless graph.
  int ReferencedNodeCount() const;

 private:
  bool directed_ = false;
  int node_count_ = 0;
  WeightKind weight_kind_ = WeightKind::kNone;
  bool node_count_inferred_ = false;
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> adjacency_;
  std::vector<int> in_degree_;
  std::unordered_set<std::uint64_t> edge_keys_;
};

CanonicalEdgeSet CanonicalEdges(const Graph& g);

// Edge-level equality: directedness, weight kind and canonical edge sets
// must agree. Node counts are compared exactly unless either side was
// rebuilt from an edge list, in which case both use max id + 1.
bool GraphsEqual(const Graph& a, const Graph& b);

}  // namespace graphtool

#endif  // GRAPHTOOL_GRAPH_H_
