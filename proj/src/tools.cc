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

#include "graphtool/tools.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <sstream>
#include <utility>

#include "graphtool/errors.h"

namespace graphtool {
namespace {

NodeId RequireNode(const Graph& g, std::int64_t node) {
  if (!g.HasNode(node)) {
    throw Error(ErrorCode::kUnknownNode,
                "node " + std::to_string(node) + " is not in the graph (" +
                    std::to_string(g.node_count()) + " nodes)");
  }
  return static_cast<NodeId>(node);
}

bool DirectedHasCycle(const Graph& g) {
  enum : char { kWhite, kGrey, kBlack };
  std::vector<char> color(g.node_count(), kWhite);
  std::vector<std::pair<NodeId, std::size_t>> stack;
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (color[root] != kWhite) continue;
    color[root] = kGrey;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      const auto& arcs = g.Neighbors(u);
      if (next == arcs.size()) {
        color[u] = kBlack;
        stack.pop_back();
        continue;
      }
      const NodeId v = arcs[next++].to;
      if (color[v] == kGrey) return true;
      if (color[v] == kWhite) {
        color[v] = kGrey;
        stack.push_back({v, 0});
      }
    }
  }
  return false;
}

bool UndirectedHasCycle(const Graph& g) {
  // A visited neighbour reached through any edge other than the tree edge
  // closes a cycle.
  std::vector<char> seen(g.node_count(), 0);
  struct Frame {
    NodeId node;
    int parent_edge;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& arcs = g.Neighbors(f.node);
      if (f.next == arcs.size()) {
        stack.pop_back();
        continue;
      }
      const Graph::Arc arc = arcs[f.next++];
      if (arc.edge_index == f.parent_edge) continue;
      if (seen[arc.to]) return true;
      seen[arc.to] = 1;
      stack.push_back({arc.to, arc.edge_index, 0});
    }
  }
  return false;
}

}  // namespace

std::string_view ToolNameString(ToolName tool) {
  switch (tool) {
    case ToolName::kCycleDetection: return "cycle_detection";
    case ToolName::kMaxTriangleSum: return "max_triangle_sum";
    case ToolName::kEdgeCount: return "edge_count";
    case ToolName::kNodeCount: return "node_count";
    case ToolName::kTopologicalSort: return "topological_sort";
    case ToolName::kDegreeCount: return "degree_count";
    case ToolName::kEdgeExistence: return "edge_existence";
    case ToolName::kNodeExistence: return "node_existence";
    case ToolName::kMaximumFlow: return "maximum_flow";
    case ToolName::kPathExistence: return "path_existence";
    case ToolName::kShortestPath: return "shortest_path";
  }
  return "";
}

std::optional<ToolName> ParseToolName(std::string_view name) {
  for (ToolName tool : kAllTools) {
    if (ToolNameString(tool) == name) return tool;
  }
  return std::nullopt;
}

bool IsBasicAnalysisTool(ToolName tool) {
  switch (tool) {
    case ToolName::kCycleDetection:
    case ToolName::kMaxTriangleSum:
    case ToolName::kEdgeCount:
    case ToolName::kNodeCount:
    case ToolName::kTopologicalSort:
      return true;
    default:
      return false;
  }
}

int ToolArity(ToolName tool) {
  switch (tool) {
    case ToolName::kDegreeCount:
    case ToolName::kNodeExistence:
      return 1;
    case ToolName::kEdgeExistence:
    case ToolName::kMaximumFlow:
    case ToolName::kPathExistence:
    case ToolName::kShortestPath:
      return 2;
    default:
      return 0;
  }
}

WeightKind ToolWeightKind(ToolName tool) {
  switch (tool) {
    case ToolName::kMaxTriangleSum:
    case ToolName::kShortestPath:
      return WeightKind::kWeight;
    case ToolName::kMaximumFlow:
      return WeightKind::kCapacity;
    default:
      return WeightKind::kNone;
  }
}

std::string AnswerToString(const Answer& answer) {
  struct Visitor {
    std::string operator()(const BoolAnswer& a) const {
      return a.value ? "True" : "False";
    }
    std::string operator()(const CountAnswer& a) const {
      return std::to_string(a.value);
    }
    std::string operator()(const ValueAnswer& a) const {
      return std::to_string(a.value);
    }
    std::string operator()(const NodeSeqAnswer& a) const {
      std::ostringstream out;
      out << '[';
      for (std::size_t i = 0; i < a.value.size(); ++i) {
        if (i) out << ", ";
        out << a.value[i];
      }
      out << ']';
      return out.str();
    }
  };
  return std::visit(Visitor{}, answer);
}

bool CycleDetection(const Graph& g) {
  return g.directed() ? DirectedHasCycle(g) : UndirectedHasCycle(g);
}

std::int64_t MaxTriangleSum(const Graph& g) {
  if (g.directed()) {
    throw Error(ErrorCode::kNotUndirected,
                "max_triangle_sum is defined on undirected graphs only");
  }
  const int n = g.node_count();
  // Dense weight lookup; 0 marks a missing edge since weights are >= 1.
  std::vector<int> w(static_cast<std::size_t>(n) * n, 0);
  for (const Edge& e : g.edges()) {
    const int weight = e.weight.value_or(1);
    w[static_cast<std::size_t>(e.u) * n + e.v] = weight;
    w[static_cast<std::size_t>(e.v) * n + e.u] = weight;
  }
  std::int64_t best = -1;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const int ab = w[static_cast<std::size_t>(a) * n + b];
      if (!ab) continue;
      for (int c = b + 1; c < n; ++c) {
        const int bc = w[static_cast<std::size_t>(b) * n + c];
        const int ac = w[static_cast<std::size_t>(a) * n + c];
        if (bc && ac) best = std::max<std::int64_t>(best, ab + bc + ac);
      }
    }
  }
  if (best < 0) {
    throw Error(ErrorCode::kNoTriangle, "the graph contains no triangle");
  }
  return best;
}

std::int64_t EdgeCount(const Graph& g) {
  return static_cast<std::int64_t>(g.edge_count());
}

std::int64_t NodeCount(const Graph& g) { return g.node_count(); }

std::vector<NodeId> TopologicalSort(const Graph& g) {
  if (!g.directed()) {
    throw Error(ErrorCode::kNotDirected,
                "topological_sort is defined on directed graphs only");
  }
  std::vector<int> indegree(g.node_count());
  for (NodeId u = 0; u < g.node_count(); ++u) indegree[u] = g.InDegree(u);
  std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (indegree[u] == 0) ready.push(u);
  }
  std::vector<NodeId> order;
  order.reserve(g.node_count());
  while (!ready.empty()) {
    const NodeId u = ready.top();
    ready.pop();
    order.push_back(u);
    for (const Graph::Arc& arc : g.Neighbors(u)) {
      if (--indegree[arc.to] == 0) ready.push(arc.to);
    }
  }
  if (static_cast<int>(order.size()) != g.node_count()) {
    throw Error(ErrorCode::kCyclicGraph,
                "the graph has a cycle; no topological order exists");
  }
  return order;
}

bool HasUniqueTopologicalOrder(const Graph& g) {
  if (!g.directed()) return false;
  std::vector<int> indegree(g.node_count());
  std::vector<NodeId> ready;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    indegree[u] = g.InDegree(u);
    if (indegree[u] == 0) ready.push_back(u);
  }
  int emitted = 0;
  while (!ready.empty()) {
    if (ready.size() != 1) return false;
    const NodeId u = ready.back();
    ready.pop_back();
    ++emitted;
    for (const Graph::Arc& arc : g.Neighbors(u)) {
      if (--indegree[arc.to] == 0) ready.push_back(arc.to);
    }
  }
  return emitted == g.node_count();
}

std::int64_t DegreeCount(const Graph& g, std::int64_t node) {
  const NodeId u = RequireNode(g, node);
  const auto out = static_cast<std::int64_t>(g.Neighbors(u).size());
  return g.directed() ? out + g.InDegree(u) : out;
}

bool EdgeExistence(const Graph& g, std::int64_t u, std::int64_t v) {
  if (!g.HasNode(u) || !g.HasNode(v)) return false;
  return g.HasEdge(static_cast<NodeId>(u), static_cast<NodeId>(v));
}

bool NodeExistence(const Graph& g, std::int64_t node) {
  return g.HasNode(node);
}

std::int64_t MaximumFlow(const Graph& g, std::int64_t source,
                         std::int64_t sink) {
  const NodeId s = RequireNode(g, source);
  const NodeId t = RequireNode(g, sink);
  if (s == t) {
    throw Error(ErrorCode::kSameSourceSink, "source and sink must differ");
  }
  // Residual network; arc i and arc i^1 are mutual reverses. An undirected
  // edge becomes two arcs that each start with the full capacity.
  struct Arc {
    NodeId to;
    std::int64_t residual;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(g.node_count());
  auto add = [&](NodeId a, NodeId b, std::int64_t forward,
                 std::int64_t backward) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, forward});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, backward});
  };
  for (const Edge& e : g.edges()) {
    const std::int64_t c = e.weight.value_or(1);
    add(e.u, e.v, c, g.directed() ? 0 : c);
  }

  std::int64_t total = 0;
  std::vector<int> via(g.node_count());
  while (true) {
    std::fill(via.begin(), via.end(), -1);
    std::queue<NodeId> frontier;
    frontier.push(s);
    via[s] = -2;
    while (!frontier.empty() && via[t] == -1) {
      const NodeId u = frontier.front();
      frontier.pop();
      for (int id : out[u]) {
        const Arc& a = arcs[id];
        if (a.residual > 0 && via[a.to] == -1) {
          via[a.to] = id;
          frontier.push(a.to);
        }
      }
    }
    if (via[t] == -1) break;
    std::int64_t push = std::numeric_limits<std::int64_t>::max();
    for (NodeId v = t; v != s; v = arcs[via[v] ^ 1].to) {
      push = std::min(push, arcs[via[v]].residual);
    }
    for (NodeId v = t; v != s; v = arcs[via[v] ^ 1].to) {
      arcs[via[v]].residual -= push;
      arcs[via[v] ^ 1].residual += push;
    }
    total += push;
  }
  return total;
}

bool PathExistence(const Graph& g, std::int64_t u, std::int64_t v) {
  const NodeId from = RequireNode(g, u);
  const NodeId to = RequireNode(g, v);
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack = {from};
  seen[from] = 1;
  while (!stack.empty()) {
    const NodeId x = stack.back();
    stack.pop_back();
    if (x == to) return true;
    for (const Graph::Arc& arc : g.Neighbors(x)) {
      if (!seen[arc.to]) {
        seen[arc.to] = 1;
        stack.push_back(arc.to);
      }
    }
  }
  return false;
}

std::int64_t ShortestPath(const Graph& g, std::int64_t u, std::int64_t v) {
  const NodeId from = RequireNode(g, u);
  const NodeId to = RequireNode(g, v);
  constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();
  std::vector<std::int64_t> dist(g.node_count(), kInf);
  using Item = std::pair<std::int64_t, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  dist[from] = 0;
  heap.push({0, from});
  while (!heap.empty()) {
    const auto [d, x] = heap.top();
    heap.pop();
    if (d != dist[x]) continue;
    if (x == to) return d;
    for (const Graph::Arc& arc : g.Neighbors(x)) {
      const std::int64_t nd = d + g.edges()[arc.edge_index].weight.value_or(1);
      if (nd < dist[arc.to]) {
        dist[arc.to] = nd;
        heap.push({nd, arc.to});
      }
    }
  }
  throw Error(ErrorCode::kUnreachable, "node " + std::to_string(v) +
                                           " is unreachable from node " +
                                           std::to_string(u));
}

Answer Dispatch(ToolName tool, const Graph& g,
                std::span<const std::int64_t> params) {
  const int arity = ToolArity(tool);
  if (static_cast<int>(params.size()) != arity) {
    throw Error(ErrorCode::kArityMismatch,
                std::string(ToolNameString(tool)) + " expects " +
                    std::to_string(arity) + " parameter(s), got " +
                    std::to_string(params.size()));
  }
  switch (tool) {
    case ToolName::kCycleDetection: return BoolAnswer{CycleDetection(g)};
    case ToolName::kMaxTriangleSum: return ValueAnswer{MaxTriangleSum(g)};
    case ToolName::kEdgeCount: return CountAnswer{EdgeCount(g)};
    case ToolName::kNodeCount: return CountAnswer{NodeCount(g)};
    case ToolName::kTopologicalSort: return NodeSeqAnswer{TopologicalSort(g)};
    case ToolName::kDegreeCount: return CountAnswer{DegreeCount(g, params[0])};
    case ToolName::kEdgeExistence:
      return BoolAnswer{EdgeExistence(g, params[0], params[1])};
    case ToolName::kNodeExistence:
      return BoolAnswer{NodeExistence(g, params[0])};
    case ToolName::kMaximumFlow:
      return ValueAnswer{MaximumFlow(g, params[0], params[1])};
    case ToolName::kPathExistence:
      return BoolAnswer{PathExistence(g, params[0], params[1])};
    case ToolName::kShortestPath:
      return ValueAnswer{ShortestPath(g, params[0], params[1])};
  }
  throw Error(ErrorCode::kUnknownTool, "unhandled tool");
}

Answer Dispatch(std::string_view tool, const Graph& g,
                std::span<const std::int64_t> params) {
  const auto parsed = ParseToolName(tool);
  if (!parsed) {
    throw Error(ErrorCode::kUnknownTool,
                "no tool named '" + std::string(tool) + "'");
  }
  return Dispatch(*parsed, g, params);
}

}  // namespace graphtool
