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

#include "graphtool/graph.h"

#include <algorithm>
#include <string>
#include <utility>

#include "graphtool/errors.h"

namespace graphtool {
namespace {

std::uint64_t EdgeKey(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

std::string EdgeText(const Edge& e) {
  return "(" + std::to_string(e.u) + ", " + std::to_string(e.v) + ")";
}

}  // namespace

std::string_view WeightKindName(WeightKind kind) {
  switch (kind) {
    case WeightKind::kNone: return "none";
    case WeightKind::kWeight: return "weight";
    case WeightKind::kCapacity: return "capacity";
  }
  return "none";
}

std::optional<WeightKind> ParseWeightKind(std::string_view name) {
  if (name == "none") return WeightKind::kNone;
  if (name == "weight") return WeightKind::kWeight;
  if (name == "capacity") return WeightKind::kCapacity;
  return std::nullopt;
}

Graph Graph::Build(bool directed, int node_count, std::vector<Edge> edges,
                   WeightKind kind) {
  if (node_count < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative node count");
  }
  Graph g;
  g.directed_ = directed;
  g.node_count_ = node_count;
  g.weight_kind_ = kind;
  g.adjacency_.resize(node_count);
  g.in_degree_.assign(node_count, 0);
  g.edge_keys_.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count) {
      throw Error(ErrorCode::kInvalidEdge,
                  "edge " + EdgeText(e) + " references a node outside 0.." +
                      std::to_string(node_count - 1));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidEdge, "self-loop " + EdgeText(e));
    }
    if (e.weight.has_value() != (kind != WeightKind::kNone)) {
      throw Error(ErrorCode::kWeightMismatch,
                  "edge " + EdgeText(e) + " weight presence disagrees with " +
                      std::string(WeightKindName(kind)));
    }
    if (e.weight && *e.weight < 1) {
      throw Error(ErrorCode::kWeightMismatch,
                  "edge " + EdgeText(e) + " has non-positive weight");
    }
    NodeId a = e.u, b = e.v;
    if (!directed && a > b) std::swap(a, b);
    if (!g.edge_keys_.insert(EdgeKey(a, b)).second) {
      throw Error(ErrorCode::kInvalidEdge, "duplicate edge " + EdgeText(e));
    }
    const int index = static_cast<int>(i);
    g.adjacency_[e.u].push_back({e.v, index});
    if (directed) {
      ++g.in_degree_[e.v];
    } else {
      g.adjacency_[e.v].push_back({e.u, index});
    }
  }
  g.edges_ = std::move(edges);
  return g;
}

Graph Graph::FromEdgeList(bool directed, std::vector<Edge> edges,
                          WeightKind kind) {
  int n = 0;
  for (const Edge& e : edges) n = std::max({n, e.u + 1, e.v + 1});
  Graph g = Build(directed, n, std::move(edges), kind);
  g.node_count_inferred_ = true;
  return g;
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  if (!HasNode(u) || !HasNode(v)) return false;
  if (!directed_ && u > v) std::swap(u, v);
  return edge_keys_.contains(EdgeKey(u, v));
}

int Graph::ReferencedNodeCount() const {
  int n = 0;
  for (const Edge& e : edges_) n = std::max({n, e.u + 1, e.v + 1});
  return n;
}

CanonicalEdgeSet CanonicalEdges(const Graph& g) {
  CanonicalEdgeSet out;
  for (const Edge& e : g.edges()) {
    CanonicalEdge c{e.u, e.v, e.weight.value_or(0)};
    if (!g.directed() && c.u > c.v) std::swap(c.u, c.v);
    out.insert(c);
  }
  return out;
}

bool GraphsEqual(const Graph& a, const Graph& b) {
  if (a.directed() != b.directed() || a.weight_kind() != b.weight_kind() ||
      a.edge_count() != b.edge_count()) {
    return false;
  }
  if (a.node_count_inferred() || b.node_count_inferred()) {
    if (a.ReferencedNodeCount() != b.ReferencedNodeCount()) return false;
  } else if (a.node_count() != b.node_count()) {
    return false;
  }
  return CanonicalEdges(a) == CanonicalEdges(b);
}

}  // namespace graphtool
