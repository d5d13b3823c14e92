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

#include "graphtool/backend.h"

#include <algorithm>
#include <numeric>

#include "graphtool/codec.h"
#include "graphtool/errors.h"
#include "graphtool/generator.h"

namespace graphtool {
namespace {

std::uint64_t Fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t Mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr FaultMode kModeOrder[] = {
    FaultMode::kDropGraphEdges,
    FaultMode::kWrongToolName,
    FaultMode::kSwapParameters,
    FaultMode::kEmitGarbage,
};

bool Applicable(FaultMode mode, StageKind stage, const TaskInstance& inst) {
  switch (mode) {
    case FaultMode::kDropGraphEdges:
      return stage == StageKind::kGraphExtraction &&
             inst.size_class == SizeClass::kWithinLimit &&
             inst.gold_graph.edge_count() >= 2;
    case FaultMode::kWrongToolName:
      return stage == StageKind::kToolNameIdentification;
    case FaultMode::kSwapParameters:
      return stage == StageKind::kToolParameterExtraction &&
             inst.gold_params.size() == 2 &&
             inst.gold_params[0] != inst.gold_params[1];
    case FaultMode::kEmitGarbage:
      return true;
    case FaultMode::kNone:
      break;
  }
  return false;
}

}  // namespace

void CompletionConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, "invalid completion config: " + what);
  };
  if (max_new_tokens <= 0) fail("max_new_tokens must be positive");
  if (!(top_p > 0.0 && top_p <= 1.0)) fail("top_p must lie in (0, 1]");
  if (temperature < 0.0) fail("temperature must be non-negative");
  if (retry_count < 0) fail("retry_count must be non-negative");
  if (timeout_ms <= 0) fail("timeout_ms must be positive");
  if (backoff_ms < 0) fail("backoff_ms must be non-negative");
  if (max_in_flight < 1) fail("max_in_flight must be at least 1");
}

OracleBackend::OracleBackend(std::vector<TaskInstance> corpus,
                             ToolRegistry registry)
    : corpus_(std::move(corpus)), registry_(std::move(registry)) {
  by_id_.reserve(corpus_.size());
  for (std::size_t i = 0; i < corpus_.size(); ++i) by_id_[corpus_[i].id] = i;
}

const TaskInstance* OracleBackend::Lookup(std::string_view id) const {
  const auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &corpus_[it->second];
}

std::string OracleBackend::GoldOutput(const TaskInstance& instance,
                                      StageKind stage) const {
  switch (stage) {
    case StageKind::kGraphExtraction:
      if (instance.graph_file) return "Path: " + *instance.graph_file;
      return "[" + RenderEdgeList(instance.gold_graph) + "]";
    case StageKind::kToolNameIdentification:
      return "API_name: " + std::string(ToolNameString(instance.gold_tool));
    case StageKind::kToolParameterExtraction: {
      const ToolSpec* spec = registry_.Find(ToolNameString(instance.gold_tool));
      if (!spec) return "";
      return RenderNamedParameters(spec->QueryParameterNames(),
                                   instance.gold_params);
    }
  }
  return "";
}

std::string OracleBackend::Complete(std::string_view prompt,
                                    const CompletionConfig&) {
  const auto stage = DetectStage(prompt);
  const auto id = FindTaskId(prompt);
  if (!stage || !id) {
    throw Error(ErrorCode::kBackendError,
                "oracle cannot identify the stage or task id of the prompt");
  }
  const TaskInstance* inst = Lookup(*id);
  if (!inst) {
    throw Error(ErrorCode::kBackendError, "oracle has no instance " + *id);
  }
  return GoldOutput(*inst, *stage);
}

std::string_view FaultModeName(FaultMode mode) {
  switch (mode) {
    case FaultMode::kNone: return "none";
    case FaultMode::kDropGraphEdges: return "drop_graph_edges";
    case FaultMode::kWrongToolName: return "wrong_tool_name";
    case FaultMode::kSwapParameters: return "swap_parameters";
    case FaultMode::kEmitGarbage: return "emit_garbage";
  }
  return "none";
}

std::optional<FaultMode> ParseFaultMode(std::string_view name) {
  for (FaultMode mode : {FaultMode::kNone, FaultMode::kDropGraphEdges,
                         FaultMode::kWrongToolName, FaultMode::kSwapParameters,
                         FaultMode::kEmitGarbage}) {
    if (FaultModeName(mode) == name) return mode;
  }
  return std::nullopt;
}

FaultPlan FaultPlan::Parse(std::string_view spec) {
  FaultPlan plan;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    const std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? "" : spec.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    const auto mode = ParseFaultMode(item.substr(0, eq));
    if (eq == std::string_view::npos || !mode || *mode == FaultMode::kNone) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad fault plan entry '" + std::string(item) +
                      "', expected <mode>=<probability>");
    }
    try {
      plan.probability[*mode] = std::stod(std::string(item.substr(eq + 1)));
    } catch (const std::exception&) {
      throw Error(ErrorCode::kInvalidArgument,
                  "bad probability in fault plan entry '" + std::string(item) + "'");
    }
  }
  plan.Validate();
  return plan;
}

double FaultPlan::Of(FaultMode mode) const {
  const auto it = probability.find(mode);
  return it == probability.end() ? 0.0 : it->second;
}

void FaultPlan::Validate() const {
  for (const auto& [mode, p] : probability) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "fault probability for " + std::string(FaultModeName(mode)) +
                      " must lie in [0, 1]");
    }
  }
}

FaultBackend::FaultBackend(std::shared_ptr<const OracleBackend> oracle,
                           FaultPlan plan, std::uint64_t seed)
    : oracle_(std::move(oracle)), plan_(std::move(plan)), seed_(seed) {
  plan_.Validate();
}

std::string FaultBackend::Complete(std::string_view prompt,
                                   const CompletionConfig&) {
  const auto stage = DetectStage(prompt);
  const auto id = FindTaskId(prompt);
  const TaskInstance* inst = id ? oracle_->Lookup(*id) : nullptr;
  if (!stage || !inst) {
    throw Error(ErrorCode::kBackendError,
                "fault backend cannot resolve the prompt's task");
  }
  std::string out = oracle_->GoldOutput(*inst, *stage);

  // Randomness depends only on (seed, instance, stage), so results do not
  // depend on call order or concurrency.
  Rng rng(Mix(Mix(seed_ ^ Fnv1a(*id)) ^ static_cast<std::uint64_t>(*stage)));
  FaultMode applied = FaultMode::kNone;
  for (FaultMode mode : kModeOrder) {
    // Draw for every mode so one mode's probability never shifts another's.
    const bool fire = Bernoulli(rng, plan_.Of(mode));
    if (applied != FaultMode::kNone || !fire || !Applicable(mode, *stage, *inst)) {
      continue;
    }
    applied = mode;
  }

  switch (applied) {
    case FaultMode::kDropGraphEdges: {
      const Graph& g = inst->gold_graph;
      const int m = static_cast<int>(g.edge_count());
      const int drop = static_cast<int>(
          UniformInt(rng, 1, std::max<std::int64_t>(1, std::min(m - 1, m / 10))));
      std::vector<int> index(m);
      std::iota(index.begin(), index.end(), 0);
      for (int i = 0; i < drop; ++i) {
        std::swap(index[i], index[UniformInt(rng, i, m - 1)]);
      }
      std::vector<char> removed(m, 0);
      for (int i = 0; i < drop; ++i) removed[index[i]] = 1;
      std::vector<Edge> kept;
      for (int i = 0; i < m; ++i) {
        if (!removed[i]) kept.push_back(g.edges()[i]);
      }
      out = "[" +
            RenderEdgeList(Graph::Build(g.directed(), g.node_count(),
                                        std::move(kept), g.weight_kind())) +
            "]";
      break;
    }
    case FaultMode::kWrongToolName: {
      std::vector<std::string> others;
      for (const ToolSpec& spec : oracle_->registry().specs()) {
        if (spec.name != ToolNameString(inst->gold_tool)) {
          others.push_back(spec.name);
        }
      }
      out = "API_name: " +
            others[UniformInt(rng, 0, static_cast<std::int64_t>(others.size()) - 1)];
      break;
    }
    case FaultMode::kSwapParameters: {
      const ToolSpec* spec =
          oracle_->registry().Find(ToolNameString(inst->gold_tool));
      std::vector<std::int64_t> swapped(inst->gold_params.rbegin(),
                                        inst->gold_params.rend());
      out = RenderNamedParameters(spec->QueryParameterNames(), swapped);
      break;
    }
    case FaultMode::kEmitGarbage:
      out = std::string(kGarbageText);
      break;
    case FaultMode::kNone:
      break;
  }

  std::lock_guard lock(mu_);
  const auto key = std::make_pair(*id, *stage);
  if (applied == FaultMode::kNone) {
    labels_.erase(key);
  } else {
    labels_[key] = applied;
  }
  return out;
}

std::vector<FaultLabel> FaultBackend::Labels() const {
  std::lock_guard lock(mu_);
  std::vector<FaultLabel> out;
  out.reserve(labels_.size());
  for (const auto& [key, mode] : labels_) {
    out.push_back({key.first, key.second, mode});
  }
  return out;
}

std::map<std::string, std::vector<FaultLabel>> FaultBackend::LabelsByInstance()
    const {
  std::map<std::string, std::vector<FaultLabel>> out;
  for (FaultLabel& label : Labels()) {
    out[label.instance_id].push_back(std::move(label));
  }
  return out;
}

}  // namespace graphtool
