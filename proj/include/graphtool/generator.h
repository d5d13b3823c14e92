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

#ifndef GRAPHTOOL_GENERATOR_H_
#define GRAPHTOOL_GENERATOR_H_

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <string_view>

#include "graphtool/graph.h"
#include "graphtool/tasks.h"

namespace graphtool {

using Rng = std::mt19937_64;

// Distribution helpers that do not depend on the standard library's
// implementation-defined distributions, so corpora are reproducible across
// toolchains.
std::int64_t UniformInt(Rng& rng, std::int64_t lo, std::int64_t hi);
double UniformUnit(Rng& rng);  // [0, 1)
bool Bernoulli(Rng& rng, double p);

// splitmix64-based mixing of the corpus seed with the instance coordinates.
std::uint64_t InstanceSeed(std::uint64_t seed, const TaskKind& kind,
                           SizeClass size, std::int64_t ordinal);

std::string InstanceId(std::int64_t index);

// A graph for `kind` within the size class bounds: no isolated nodes,
// weighted per the kind's tool, a Hamiltonian-backbone DAG for topological
// sort and at least one triangle for triangle sums. Throws
// Error(kExhaustedRetries).
Graph GenerateGraph(const TaskKind& kind, SizeClass size,
                    const GenConfig& config, Rng& rng);

// `ordinal` is the instance's position within its (kind, size) slice: it
// picks the description variant (ordinal % 5) and, for boolean kinds, the
// answer class (even ordinals are true), which balances every slice.
TaskInstance GenerateInstance(const TaskKind& kind, SizeClass size,
                              std::int64_t ordinal, std::string id,
                              const GenConfig& config, Rng& rng);

std::string RenderTaskText(const TaskInstance& instance);

// ceil(chars / 4).
std::int64_t EstimateTokens(std::string_view text);
SizeClass ClassifySize(std::string_view text, int budget);

// Emits instances in (size, kind, ordinal) order with sequential ids.
// Output is a pure function of `config`; `workers` only affects speed.
void GenerateCorpus(const GenConfig& config,
                    const std::function<void(TaskInstance&&)>& sink,
                    int workers = 1);

}  // namespace graphtool

#endif  // GRAPHTOOL_GENERATOR_H_
