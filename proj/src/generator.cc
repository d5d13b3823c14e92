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

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <numeric>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "graphtool/codec.h"
#include "graphtool/errors.h"

namespace graphtool {
namespace {

std::uint64_t SplitMix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Working edge set for a graph under construction.
class EdgeBuilder {
 public:
  EdgeBuilder(int n, bool directed)
      : n_(n), directed_(directed), present_(static_cast<std::size_t>(n) * n),
        degree_(n, 0) {}

  int n() const { return n_; }
  std::size_t size() const { return pairs_.size(); }
  int degree(int u) const { return degree_[u]; }

  bool Has(int u, int v) const {
    if (!directed_ && u > v) std::swap(u, v);
    return present_[Index(u, v)];
  }

  bool Add(int u, int v) {
    if (u == v || Has(u, v)) return false;
    const int a = directed_ || u < v ? u : v;
    const int b = directed_ || u < v ? v : u;
    present_[Index(a, b)] = true;
    pairs_.push_back({a, b});
    ++degree_[u];
    ++degree_[v];
    return true;
  }

  void Remove(std::size_t i) {
    const auto [u, v] = pairs_[i];
    present_[Index(u, v)] = false;
    --degree_[u];
    --degree_[v];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(i));
  }

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

 private:
  std::size_t Index(int u, int v) const {
    return static_cast<std::size_t>(u) * n_ + v;
  }

  int n_;
  bool directed_;
  std::vector<bool> present_;
  std::vector<int> degree_;
  std::vector<std::pair<int, int>> pairs_;
};

std::vector<int> RandomPermutation(int n, Rng& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[UniformInt(rng, 0, i)]);
  }
  return perm;
}

class GraphSampler {
 public:
  GraphSampler(const TaskKind& kind, SizeClass size, const GenConfig& config,
               Rng& rng)
      : kind_(kind), bounds_(BoundsFor(size)), config_(config), rng_(rng) {}

  int SampleNodeCount(int floor = 0) {
    return static_cast<int>(UniformInt(
        rng_, std::max(bounds_.min_nodes, floor), bounds_.max_nodes));
  }

  // Edge probability, capped so the expected edge count leaves room under
  // the size class's edge limit for isolated-node repair.
  double SampleProbability(int n, double pairs) {
    const double p = config_.edge_probability_min +
                     UniformUnit(rng_) * (config_.edge_probability_max -
                                          config_.edge_probability_min);
    if (pairs <= 0) return p;
    const double room = 0.9 * (bounds_.max_edges - n) / pairs;
    return std::clamp(std::min(p, room), 0.0, 1.0);
  }

  EdgeBuilder ErdosRenyi(int n) {
    const bool directed = kind_.directed;
    const double pairs = directed ? double(n) * (n - 1) : double(n) * (n - 1) / 2;
    const double p = SampleProbability(n, pairs);
    EdgeBuilder b(n, directed);
    for (int u = 0; u < n; ++u) {
      for (int v = directed ? 0 : u + 1; v < n; ++v) {
        if (u != v && Bernoulli(rng_, p)) b.Add(u, v);
      }
    }
    return b;
  }

  // Edges only run forward along `rank`.
  EdgeBuilder RandomDag(int n, const std::vector<int>& order) {
    const double p = SampleProbability(n, double(n) * (n - 1) / 2);
    EdgeBuilder b(n, true);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (Bernoulli(rng_, p)) b.Add(order[i], order[j]);
      }
    }
    return b;
  }

  // Random spanning tree with a random fraction of edges removed, never
  // isolating a node.
  EdgeBuilder RandomForest(int n) {
    EdgeBuilder b(n, false);
    const std::vector<int> order = RandomPermutation(n, rng_);
    for (int i = 1; i < n; ++i) {
      b.Add(order[i], order[UniformInt(rng_, 0, i - 1)]);
    }
    const double drop = 0.5 * UniformUnit(rng_);
    for (std::size_t i = b.size(); i-- > 0;) {
      const auto [u, v] = b.pairs()[i];
      if (b.degree(u) > 1 && b.degree(v) > 1 && Bernoulli(rng_, drop)) {
        b.Remove(i);
      }
    }
    return b;
  }

  // Attaches every isolated node to a random partner. With `order`, edges
  // respect it (keeps DAGs acyclic). Attaching an isolated node never
  // closes a cycle, so forests stay forests.
  void RepairIsolated(EdgeBuilder& b, const std::vector<int>* order) {
    std::vector<int> rank;
    if (order) {
      rank.resize(b.n());
      for (int i = 0; i < b.n(); ++i) rank[(*order)[i]] = i;
    }
    for (int u = 0; u < b.n(); ++u) {
      if (b.degree(u) > 0) continue;
      int w = static_cast<int>(UniformInt(rng_, 0, b.n() - 2));
      if (w >= u) ++w;
      if (order) {
        rank[u] < rank[w] ? b.Add(u, w) : b.Add(w, u);
      } else if (kind_.directed && Bernoulli(rng_, 0.5)) {
        b.Add(w, u);
      } else {
        b.Add(u, w);
      }
    }
  }

  // Nodes split into two groups A and B with no edge from B back into A
  // (none across at all when undirected), so B never reaches A. Isolated
  // nodes are attached inside their own group.
  EdgeBuilder SplitErdosRenyi(int n) {
    const bool directed = kind_.directed;
    const double pairs = directed ? double(n) * (n - 1) : double(n) * (n - 1) / 2;
    const double p = SampleProbability(n, pairs);
    const std::vector<int> perm = RandomPermutation(n, rng_);
    const int k = static_cast<int>(UniformInt(rng_, 2, n - 2));
    std::vector<int> side(n);
    std::vector<std::vector<int>> groups(2);
    for (int i = 0; i < n; ++i) {
      side[perm[i]] = i < k ? 0 : 1;
      groups[side[perm[i]]].push_back(perm[i]);
    }
    EdgeBuilder b(n, directed);
    for (int u = 0; u < n; ++u) {
      for (int v = directed ? 0 : u + 1; v < n; ++v) {
        if (u == v) continue;
        const bool allowed = side[u] == side[v] ||
                             (directed && side[u] == 0 && side[v] == 1);
        if (allowed && Bernoulli(rng_, p)) b.Add(u, v);
      }
    }
    for (int u = 0; u < n; ++u) {
      if (b.degree(u) > 0) continue;
      const auto& group = groups[side[u]];
      int w = u;
      while (w == u) {
        w = group[UniformInt(rng_, 0, static_cast<std::int64_t>(group.size()) - 1)];
      }
      if (directed && Bernoulli(rng_, 0.5)) {
        b.Add(w, u);
      } else {
        b.Add(u, w);
      }
    }
    return b;
  }

  bool WithinEdgeLimit(const EdgeBuilder& b) const {
    return static_cast<int>(b.size()) <= bounds_.max_edges;
  }

  Graph Finish(const EdgeBuilder& b) {
    const WeightKind kind = ToolWeightKind(kind_.tool);
    std::vector<Edge> edges;
    edges.reserve(b.size());
    for (const auto& [u, v] : b.pairs()) {
      Edge e{u, v, std::nullopt};
      if (kind != WeightKind::kNone) {
        e.weight = static_cast<int>(
            UniformInt(rng_, config_.weight_min, config_.weight_max));
      }
      edges.push_back(e);
    }
    return Graph::Build(kind_.directed, b.n(), std::move(edges), kind);
  }

  Rng& rng() { return rng_; }

 private:
  TaskKind kind_;
  SizeBounds bounds_;
  const GenConfig& config_;
  Rng& rng_;
};

bool HasTriangle(const EdgeBuilder& b) {
  const int n = b.n();
  for (int a = 0; a < n; ++a) {
    for (int c = a + 1; c < n; ++c) {
      if (!b.Has(a, c)) continue;
      for (int d = c + 1; d < n; ++d) {
        if (b.Has(c, d) && b.Has(a, d)) return true;
      }
    }
  }
  return false;
}

// One sampling attempt; nullopt asks the caller to retry.
std::optional<Graph> TryGenerateGraph(const TaskKind& kind, SizeClass size,
                                      const GenConfig& config, Rng& rng,
                                      std::optional<bool> acyclic,
                                      bool split = false) {
  GraphSampler s(kind, size, config, rng);
  switch (kind.tool) {
    case ToolName::kTopologicalSort: {
      const int n = s.SampleNodeCount();
      const std::vector<int> order = RandomPermutation(n, rng);
      const double p =
          s.SampleProbability(n, double(n - 1) * (n - 2) / 2 + 1);
      EdgeBuilder b(n, true);
      for (int i = 0; i + 1 < n; ++i) b.Add(order[i], order[i + 1]);
      for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
          if (Bernoulli(rng, p)) b.Add(order[i], order[j]);
        }
      }
      if (!s.WithinEdgeLimit(b)) return std::nullopt;
      return s.Finish(b);
    }
    case ToolName::kMaxTriangleSum: {
      EdgeBuilder b = s.ErdosRenyi(s.SampleNodeCount(3));
      s.RepairIsolated(b, nullptr);
      if (!HasTriangle(b)) {
        std::vector<int> triple = RandomPermutation(b.n(), rng);
        b.Add(triple[0], triple[1]);
        b.Add(triple[1], triple[2]);
        b.Add(triple[0], triple[2]);
      }
      if (!s.WithinEdgeLimit(b)) return std::nullopt;
      return s.Finish(b);
    }
    default:
      break;
  }
  if (acyclic.value_or(false)) {
    const int n = s.SampleNodeCount();
    if (kind.directed) {
      const std::vector<int> order = RandomPermutation(n, rng);
      EdgeBuilder b = s.RandomDag(n, order);
      s.RepairIsolated(b, &order);
      if (!s.WithinEdgeLimit(b)) return std::nullopt;
      return s.Finish(b);
    }
    EdgeBuilder b = s.RandomForest(n);
    return s.Finish(b);
  }
  if (split) {
    EdgeBuilder b = s.SplitErdosRenyi(s.SampleNodeCount(4));
    if (!s.WithinEdgeLimit(b)) return std::nullopt;
    return s.Finish(b);
  }
  EdgeBuilder b = s.ErdosRenyi(s.SampleNodeCount());
  s.RepairIsolated(b, nullptr);
  if (!s.WithinEdgeLimit(b)) return std::nullopt;
  return s.Finish(b);
}

std::vector<std::vector<char>> Reachability(const Graph& g) {
  const int n = g.node_count();
  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    reach[s][s] = 1;
    stack.assign(1, s);
    while (!stack.empty()) {
      const NodeId x = stack.back();
      stack.pop_back();
      for (const Graph::Arc& arc : g.Neighbors(x)) {
        if (!reach[s][arc.to]) {
          reach[s][arc.to] = 1;
          stack.push_back(arc.to);
        }
      }
    }
  }
  return reach;
}

template <typename Pred>
std::optional<std::pair<NodeId, NodeId>> PickPair(const Graph& g, Rng& rng,
                                                  Pred pred) {
  std::vector<std::pair<NodeId, NodeId>> candidates;
  for (NodeId u = 0; u < g.node_count(); ++u) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (u != v && pred(u, v)) candidates.push_back({u, v});
    }
  }
  if (candidates.empty()) return std::nullopt;
  return candidates[UniformInt(rng, 0,
                               static_cast<std::int64_t>(candidates.size()) - 1)];
}

bool BalancedKind(ToolName tool) {
  switch (tool) {
    case ToolName::kCycleDetection:
    case ToolName::kEdgeExistence:
    case ToolName::kNodeExistence:
    case ToolName::kPathExistence:
      return true;
    default:
      return false;
  }
}

// Picks query parameters for `target` (when the kind is balanced); nullopt
// asks for a new graph.
std::optional<std::vector<std::int64_t>> PickParams(const TaskKind& kind,
                                                    const Graph& g,
                                                    std::optional<bool> target,
                                                    Rng& rng) {
  const int n = g.node_count();
  switch (kind.tool) {
    case ToolName::kDegreeCount:
      return std::vector<std::int64_t>{UniformInt(rng, 0, n - 1)};
    case ToolName::kNodeExistence:
      if (*target) return std::vector<std::int64_t>{UniformInt(rng, 0, n - 1)};
      return std::vector<std::int64_t>{
          UniformInt(rng, n, n + std::max(n, 10) - 1)};
    case ToolName::kEdgeExistence: {
      const bool want = *target;
      const auto pair = PickPair(g, rng, [&](NodeId u, NodeId v) {
        return g.HasEdge(u, v) == want;
      });
      if (!pair) return std::nullopt;
      return std::vector<std::int64_t>{pair->first, pair->second};
    }
    case ToolName::kPathExistence:
    case ToolName::kShortestPath: {
      const bool want = kind.tool == ToolName::kShortestPath || *target;
      const auto reach = Reachability(g);
      const auto pair = PickPair(g, rng, [&](NodeId u, NodeId v) {
        return static_cast<bool>(reach[u][v]) == want;
      });
      if (!pair) return std::nullopt;
      return std::vector<std::int64_t>{pair->first, pair->second};
    }
    case ToolName::kMaximumFlow: {
      const auto pair = PickPair(g, rng, [](NodeId, NodeId) { return true; });
      return std::vector<std::int64_t>{pair->first, pair->second};
    }
    default:
      return std::vector<std::int64_t>{};
  }
}

// Description templates; {G} is the graph phrase and {node}, {source},
// {target} the query parameters.
using Templates = std::array<std::string_view, kDescriptionVariants>;

const Templates& TemplatesFor(ToolName tool) {
  static const Templates cycle = {
      "Given {G}, determine whether the graph contains a cycle.",
      "Consider {G}. Is there any cycle in this graph?",
      "Check whether {G} has at least one cycle.",
      "Here is {G}. Does a cycle exist anywhere in it?",
      "Determine if {G} is cyclic, that is, whether some node can reach "
      "itself again by following edges without reusing an edge.",
  };
  static const Templates triangle = {
      "Given {G}, find the triangle whose three edge weights have the largest "
      "sum and report that sum.",
      "Consider {G}. Among all triangles in this graph, what is the maximum "
      "total edge weight?",
      "For {G}, compute the largest sum of edge weights over all triangles.",
      "Here is {G}. Which triangle has the heaviest total weight? Give the "
      "weight sum.",
      "In {G}, three mutually connected nodes form a triangle. Report the "
      "maximum possible sum of the weights of a triangle's three edges.",
  };
  static const Templates edge_count = {
      "Given {G}, how many edges does the graph have?",
      "Consider {G}. Count the total number of edges.",
      "Report the number of edges in {G}.",
      "Here is {G}. What is its edge count?",
      "Determine the total number of edges contained in {G}.",
  };
  static const Templates node_count = {
      "Given {G}, how many nodes does the graph have?",
      "Consider {G}. Count the total number of nodes.",
      "Report the number of nodes in {G}.",
      "Here is {G}. What is its node count?",
      "Determine the total number of nodes contained in {G}.",
  };
  static const Templates topo = {
      "Given {G}, arrange all nodes in topological order.",
      "Consider {G}. Output a topological sorting of its nodes.",
      "Find the topological order of the nodes of {G}.",
      "Here is {G}. List the nodes so that every edge points from an earlier "
      "node to a later one.",
      "Sort the nodes of {G} topologically.",
  };
  static const Templates degree = {
      "Given {G}, how many edges are connected to node {node}?",
      "Consider {G}. Count the edges incident to node {node}.",
      "What is the degree of node {node} in {G}?",
      "In {G}, report the number of edges that touch node {node}.",
      "For {G}, determine how many edges node {node} takes part in.",
  };
  static const Templates edge_exists = {
      "Given {G}, is there an edge from node {source} to node {target}?",
      "Consider {G}. Determine whether an edge goes from node {source} to node "
      "{target}.",
      "Does {G} contain an edge from node {source} to node {target}?",
      "Here is {G}. Check if node {source} is directly linked to node "
      "{target}.",
      "In {G}, does a direct edge run from node {source} to node {target}?",
  };
  static const Templates node_exists = {
      "Given {G}, does node {node} exist in the graph?",
      "Consider {G}. Determine whether node {node} is one of its nodes.",
      "Is node {node} present in {G}?",
      "Here is {G}. Check if the graph contains node {node}.",
      "In {G}, can node {node} be found?",
  };
  static const Templates flow = {
      "Given {G}, what is the maximum flow from node {source} to node "
      "{target}?",
      "Consider {G}. Compute the largest amount of flow that can be sent from "
      "source node {source} to sink node {target}.",
      "Find the maximum flow in {G} with node {source} as the source and node "
      "{target} as the sink.",
      "Here is {G}. How much flow at most can travel from node {source} to "
      "node {target}?",
      "In {G}, determine the value of a maximum flow from node {source} to "
      "node {target}.",
  };
  static const Templates path_exists = {
      "Given {G}, is there a path from node {source} to node {target}?",
      "Consider {G}. Determine whether node {target} can be reached from node "
      "{source}.",
      "Does {G} contain a path that starts at node {source} and ends at node "
      "{target}?",
      "Here is {G}. Check if some path leads from node {source} to node "
      "{target}.",
      "In {G}, is node {target} reachable from node {source}?",
  };
  static const Templates shortest = {
      "Given {G}, what is the length of the shortest path from node {source} "
      "to node {target}?",
      "Consider {G}. Compute the minimum total weight of a path from node "
      "{source} to node {target}.",
      "Find the shortest distance from node {source} to node {target} in {G}.",
      "Here is {G}. How far is node {target} from node {source} along the "
      "cheapest path?",
      "In {G}, determine the minimum distance between node {source} and node "
      "{target}.",
  };
  switch (tool) {
    case ToolName::kCycleDetection: return cycle;
    case ToolName::kMaxTriangleSum: return triangle;
    case ToolName::kEdgeCount: return edge_count;
    case ToolName::kNodeCount: return node_count;
    case ToolName::kTopologicalSort: return topo;
    case ToolName::kDegreeCount: return degree;
    case ToolName::kEdgeExistence: return edge_exists;
    case ToolName::kNodeExistence: return node_exists;
    case ToolName::kMaximumFlow: return flow;
    case ToolName::kPathExistence: return path_exists;
    case ToolName::kShortestPath: return shortest;
  }
  return cycle;
}

std::string GraphPhrase(const TaskInstance& instance) {
  std::string phrase = instance.kind.directed ? "a directed " : "an undirected ";
  switch (instance.graph.weight_kind()) {
    case WeightKind::kWeight: phrase += "weighted graph"; break;
    case WeightKind::kCapacity: phrase += "flow network with edge capacities"; break;
    case WeightKind::kNone: phrase += "graph"; break;
  }
  if (instance.graph_file) {
    return phrase + " whose edge list is stored in the file " +
           *instance.graph_file;
  }
  return phrase + " with edges " + RenderEdgeList(instance.graph);
}

void ReplaceAll(std::string& s, std::string_view from, const std::string& to) {
  for (auto pos = s.find(from); pos != std::string::npos;
       pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
}

}  // namespace

std::int64_t UniformInt(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) return lo;
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

double UniformUnit(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool Bernoulli(Rng& rng, double p) { return UniformUnit(rng) < p; }

std::uint64_t InstanceSeed(std::uint64_t seed, const TaskKind& kind,
                           SizeClass size, std::int64_t ordinal) {
  std::uint64_t h = SplitMix(seed);
  h = SplitMix(h ^ static_cast<std::uint64_t>(kind.tool));
  h = SplitMix(h ^ (kind.directed ? 1u : 0u));
  h = SplitMix(h ^ static_cast<std::uint64_t>(size));
  return SplitMix(h ^ static_cast<std::uint64_t>(ordinal));
}

std::string InstanceId(std::int64_t index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "q%08lld", static_cast<long long>(index));
  return buf;
}

Graph GenerateGraph(const TaskKind& kind, SizeClass size,
                    const GenConfig& config, Rng& rng) {
  for (int attempt = 0; attempt < config.retry_cap; ++attempt) {
    if (auto g = TryGenerateGraph(kind, size, config, rng, std::nullopt)) {
      return *std::move(g);
    }
  }
  throw Error(ErrorCode::kExhaustedRetries,
              "could not generate a graph for " + TaskKindName(kind));
}

TaskInstance GenerateInstance(const TaskKind& kind, SizeClass size,
                              std::int64_t ordinal, std::string id,
                              const GenConfig& config, Rng& rng) {
  if (!IsValidKind(kind)) {
    throw Error(ErrorCode::kInvalidArgument,
                "invalid task kind " + TaskKindName(kind));
  }
  std::optional<bool> target;
  if (BalancedKind(kind.tool)) target = ordinal % 2 == 0;
  std::optional<bool> acyclic;
  if (kind.tool == ToolName::kCycleDetection) acyclic = !*target;
  // Dense random graphs are almost always connected, so unreachable pairs
  // come from a graph built with a one-way cut.
  const bool split = kind.tool == ToolName::kPathExistence && !*target;

  for (int attempt = 0; attempt < config.retry_cap; ++attempt) {
    std::optional<Graph> g =
        TryGenerateGraph(kind, size, config, rng, acyclic, split);
    if (!g) continue;
    if (kind.tool == ToolName::kCycleDetection && CycleDetection(*g) != *target) {
      continue;
    }
    auto params = PickParams(kind, *g, target, rng);
    if (!params) continue;

    TaskInstance inst;
    inst.id = std::move(id);
    inst.kind = kind;
    inst.graph = *std::move(g);
    inst.params = *params;
    inst.description_variant = static_cast<int>(ordinal % kDescriptionVariants);
    inst.size_class = size;
    if (size == SizeClass::kExceedsLimit) {
      inst.graph_file = config.graph_dir + "/" + inst.id +
                        std::string(kGraphFileExtension);
    }
    inst.task_text = RenderTaskText(inst);
    if (size == SizeClass::kWithinLimit &&
        ClassifySize(inst.task_text, config.token_budget) != size) {
      id = std::move(inst.id);
      continue;
    }
    inst.gold_graph = inst.graph;
    inst.gold_tool = kind.tool;
    inst.gold_params = inst.params;
    inst.gold_answer = Dispatch(inst.gold_tool, inst.gold_graph, inst.gold_params);
    if (target && std::get<BoolAnswer>(inst.gold_answer).value != *target) {
      throw Error(ErrorCode::kInvalidArgument,
                  "generator produced an unbalanced answer for " +
                      TaskKindName(kind));
    }
    if (kind.tool == ToolName::kTopologicalSort &&
        !HasUniqueTopologicalOrder(inst.graph)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "generator produced a non-unique topological order");
    }
    return inst;
  }
  throw Error(ErrorCode::kExhaustedRetries,
              "exhausted " + std::to_string(config.retry_cap) +
                  " retries generating " + TaskKindName(kind) + " (" +
                  std::string(SizeClassName(size)) + ")");
}

std::string RenderTaskText(const TaskInstance& instance) {
  std::string text(TemplatesFor(instance.kind.tool)
                       .at(instance.description_variant % kDescriptionVariants));
  ReplaceAll(text, "{G}", GraphPhrase(instance));
  const auto& p = instance.params;
  if (ToolArity(instance.kind.tool) == 1 && p.size() == 1) {
    ReplaceAll(text, "{node}", std::to_string(p[0]));
  } else if (p.size() == 2) {
    ReplaceAll(text, "{source}", std::to_string(p[0]));
    ReplaceAll(text, "{target}", std::to_string(p[1]));
  }
  return text;
}

std::int64_t EstimateTokens(std::string_view text) {
  return (static_cast<std::int64_t>(text.size()) + 3) / 4;
}

SizeClass ClassifySize(std::string_view text, int budget) {
  if (budget <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "token budget must be positive");
  }
  return EstimateTokens(text) <= budget ? SizeClass::kWithinLimit
                                        : SizeClass::kExceedsLimit;
}

void GenerateCorpus(const GenConfig& config,
                    const std::function<void(TaskInstance&&)>& sink,
                    int workers) {
  config.Validate();
  struct Slot {
    TaskKind kind;
    SizeClass size;
    std::int64_t ordinal;
  };
  std::vector<Slot> slots;
  for (SizeClass size : config.sizes) {
    for (const TaskKind& kind : config.kinds) {
      for (std::int64_t i = 0; i < config.count_per_kind; ++i) {
        slots.push_back({kind, size, i});
      }
    }
  }
  auto make = [&](std::size_t index) {
    const Slot& s = slots[index];
    Rng rng(InstanceSeed(config.seed, s.kind, s.size, s.ordinal));
    return GenerateInstance(s.kind, s.size, s.ordinal,
                            InstanceId(static_cast<std::int64_t>(index)),
                            config, rng);
  };
  workers = std::max(1, workers);
  if (workers == 1) {
    for (std::size_t i = 0; i < slots.size(); ++i) sink(make(i));
    return;
  }
  // Batches are generated in parallel and emitted in order.
  const std::size_t batch = static_cast<std::size_t>(workers) * 64;
  for (std::size_t begin = 0; begin < slots.size(); begin += batch) {
    const std::size_t end = std::min(slots.size(), begin + batch);
    std::vector<std::optional<TaskInstance>> out(end - begin);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        try {
          for (std::size_t i = begin + w; i < end; i += workers) {
            out[i - begin] = make(i);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
    for (auto& inst : out) sink(*std::move(inst));
  }
}

}  // namespace graphtool
