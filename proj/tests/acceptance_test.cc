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

// Acceptance checks. Prints one PASS, FAIL or SKIP line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "graphtool/backend.h"
#include "graphtool/chat_client.h"
#include "graphtool/codec.h"
#include "graphtool/dataset.h"
#include "graphtool/evaluator.h"
#include "graphtool/generator.h"
#include "graphtool/io.h"
#include "graphtool/pipeline.h"
#include "graphtool/serialization.h"
#include "graphtool/tools.h"
#include "oracles.h"
#include "test_util.h"

namespace graphtool {
namespace {

using Clock = std::chrono::steady_clock;

// Collects the first few problems of a criterion.
struct Outcome {
  bool skipped = false;
  std::vector<std::string> problems;
  std::string note;

  void Fail(const std::string& what) {
    if (problems.size() < 5) problems.push_back(what);
    else if (problems.size() == 5) problems.push_back("...");
  }
  bool ok() const { return problems.empty(); }
};

// An answer or the error code a tool is expected to raise.
using Expected = std::variant<Answer, ErrorCode>;

Expected Observe(ToolName tool, const Graph& g, std::vector<std::int64_t> params) {
  try {
    return Dispatch(tool, g, params);
  } catch (const Error& e) {
    return e.code();
  }
}

std::string Describe(const Expected& e) {
  if (const auto* a = std::get_if<Answer>(&e)) return AnswerToString(*a);
  return std::string(ErrorCodeName(std::get<ErrorCode>(e)));
}

// ---------------------------------------------------------------------------
// 1. Every kind against its brute-force oracle.

void CheckKindAgainstOracle(const TaskKind& kind, std::mt19937_64& rng, Outcome& out) {
  const WeightKind weight = ToolWeightKind(kind.tool);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 7;
    const double p = 0.15 + 0.1 * (trial % 7);
    const Graph g = oracle::RandomGraph(rng, kind.directed, n, p, weight);
    const oracle::RawGraph raw = oracle::Raw(g);
    auto check = [&](std::vector<std::int64_t> params, const Expected& want) {
      const Expected got = Observe(kind.tool, g, params);
      bool same = got.index() == want.index();
      if (same && kind.tool == ToolName::kTopologicalSort && got.index() == 0) {
        const auto& seq = std::get<NodeSeqAnswer>(std::get<Answer>(got)).value;
        same = oracle::IsTopologicalOrder(raw, std::vector<int>(seq.begin(), seq.end()));
      } else if (same) {
        same = got == want;
      }
      if (!same) {
        out.Fail(TaskKindName(kind) + " trial " + std::to_string(trial) + ": got " +
                 Describe(got) + ", oracle " + Describe(want));
      }
    };
    switch (kind.tool) {
      case ToolName::kCycleDetection:
        check({}, Answer(BoolAnswer{oracle::HasCycle(raw)}));
        break;
      case ToolName::kMaxTriangleSum: {
        const auto best = oracle::MaxTriangleSum(raw);
        check({}, best ? Expected(Answer(ValueAnswer{*best})) : Expected(ErrorCode::kNoTriangle));
        break;
      }
      case ToolName::kEdgeCount:
        check({}, Answer(CountAnswer{static_cast<std::int64_t>(raw.edges.size())}));
        break;
      case ToolName::kNodeCount:
        check({}, Answer(CountAnswer{raw.n}));
        break;
      case ToolName::kTopologicalSort: {
        const bool acyclic = !oracle::AllTopologicalOrders(raw).empty();
        check({}, acyclic ? Expected(Answer(NodeSeqAnswer{})) : Expected(ErrorCode::kCyclicGraph));
        break;
      }
      case ToolName::kDegreeCount:
        for (int u = 0; u < n; ++u) check({u}, Answer(CountAnswer{oracle::Degree(raw, u)}));
        check({n}, ErrorCode::kUnknownNode);
        break;
      case ToolName::kNodeExistence:
        for (int u = -1; u <= n; ++u) check({u}, Answer(BoolAnswer{u >= 0 && u < n}));
        break;
      case ToolName::kEdgeExistence:
        for (int u = 0; u <= n; ++u) {
          for (int v = 0; v <= n; ++v) {
            check({u, v}, Answer(BoolAnswer{oracle::EdgeExists(raw, u, v)}));
          }
        }
        break;
      case ToolName::kPathExistence:
        for (int u = 0; u < n; ++u) {
          for (int v = 0; v < n; ++v) {
            check({u, v}, Answer(BoolAnswer{oracle::Reachable(raw, u, v)}));
          }
        }
        break;
      case ToolName::kShortestPath:
        for (int u = 0; u < n; ++u) {
          for (int v = 0; v < n; ++v) {
            const auto d = oracle::ShortestPath(raw, u, v);
            check({u, v}, d ? Expected(Answer(ValueAnswer{*d})) : Expected(ErrorCode::kUnreachable));
          }
        }
        break;
      case ToolName::kMaximumFlow:
        for (int s = 0; s < n; ++s) {
          for (int t = 0; t < n; ++t) {
            check({s, t}, s == t ? Expected(ErrorCode::kSameSourceSink)
                                 : Expected(Answer(ValueAnswer{oracle::MinCut(raw, s, t)})));
          }
        }
        break;
    }
  }
}

Outcome ToolOracleEquivalence() {
  Outcome out;
  std::uint64_t seed = 100;
  for (const TaskKind& kind : AllTaskKinds()) {
    std::mt19937_64 rng(seed++);
    CheckKindAgainstOracle(kind, rng, out);
  }
  out.note = "20 kinds x 200 graphs";
  return out;
}

// ---------------------------------------------------------------------------
// 2. Max-flow equals the enumerated minimum cut.

Outcome MaxFlowMinCut() {
  Outcome out;
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> size(2, 8);
  std::uniform_real_distribution<double> density(0.2, 0.8);
  for (int i = 0; i < 100; ++i) {
    const int n = size(rng);
    const Graph g = oracle::RandomGraph(rng, i % 2 == 0, n, density(rng),
                                        WeightKind::kCapacity, 20);
    const oracle::RawGraph raw = oracle::Raw(g);
    std::uniform_int_distribution<int> node(0, n - 1);
    const int s = node(rng);
    int t = node(rng);
    while (t == s) t = node(rng);
    const std::int64_t flow = MaximumFlow(g, s, t);
    const std::int64_t cut = oracle::MinCut(raw, s, t);
    if (flow != cut) {
      out.Fail("network " + std::to_string(i) + ": flow " + std::to_string(flow) +
               " vs cut " + std::to_string(cut));
    }
  }
  out.note = "100 networks";
  return out;
}

// ---------------------------------------------------------------------------
// 3. Generator constraints over 2000 instances per kind.

bool IsBooleanTool(ToolName tool) {
  return tool == ToolName::kCycleDetection || tool == ToolName::kEdgeExistence ||
         tool == ToolName::kNodeExistence || tool == ToolName::kPathExistence;
}

std::string CorpusBytes(const GenConfig& config, int workers,
                        std::vector<TaskInstance>* keep) {
  std::string bytes;
  GenerateCorpus(
      config,
      [&](TaskInstance&& inst) {
        bytes += InstanceToJson(inst).dump();
        bytes += '\n';
        if (keep) keep->push_back(std::move(inst));
      },
      workers);
  return bytes;
}

Outcome GeneratorConstraints() {
  Outcome out;
  GenConfig config;
  config.count_per_kind = 2000;
  config.seed = 20260101;
  std::vector<TaskInstance> corpus;
  const std::string first = CorpusBytes(config, 1, &corpus);

  std::map<TaskKind, std::pair<int, int>> balance;  // (true, total)
  const SizeBounds bounds = BoundsFor(SizeClass::kWithinLimit);
  for (const TaskInstance& inst : corpus) {
    const Graph& g = inst.graph;
    if (g.node_count() < bounds.min_nodes || g.node_count() > bounds.max_nodes ||
        static_cast<int>(g.edge_count()) > bounds.max_edges) {
      out.Fail(inst.id + " violates the size bounds");
    }
    if (EstimateTokens(inst.task_text) > config.token_budget) {
      out.Fail(inst.id + " exceeds the token budget");
    }
    if (inst.kind.tool == ToolName::kTopologicalSort && !HasUniqueTopologicalOrder(g)) {
      out.Fail(inst.id + " has no unique topological order");
    }
    if (inst.kind.tool == ToolName::kMaxTriangleSum &&
        !oracle::MaxTriangleSum(oracle::Raw(g))) {
      out.Fail(inst.id + " has no triangle");
    }
    if (IsBooleanTool(inst.kind.tool)) {
      auto& [yes, total] = balance[inst.kind];
      yes += std::get<BoolAnswer>(inst.gold_answer).value;
      ++total;
    }
  }
  if (corpus.size() != 2000 * AllTaskKinds().size()) out.Fail("wrong corpus size");
  double worst = 0.0;
  for (const auto& [kind, counts] : balance) {
    const double share = 100.0 * counts.first / counts.second;
    worst = std::max(worst, std::abs(share - 50.0));
    if (std::abs(share - 50.0) > 2.5) {
      out.Fail(TaskKindName(kind) + " true share " + std::to_string(share) + "%");
    }
  }
  if (balance.size() != 8) out.Fail("expected 8 boolean kinds");
  const std::string second = CorpusBytes(config, 2, nullptr);
  if (first != second) out.Fail("regeneration is not byte-identical");
  out.note = std::to_string(corpus.size()) + " instances, worst balance offset " +
             std::to_string(worst).substr(0, 4) + " points";
  return out;
}

// ---------------------------------------------------------------------------
// 4. Codec round trip with prose around the edge list.

const std::vector<std::string> kProse = {
    "Sure, here is the graph you asked for.",
    "The extracted structure is shown below.",
    "Output:",
    "I have copied every edge once.",
    "Let me know if anything else is needed.",
    "Graph:",
    "",
};

std::string Fuzz(const std::string& body, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, kProse.size() - 1);
  std::uniform_int_distribution<int> style(0, 3);
  std::string text = kProse[pick(rng)];
  text += style(rng) % 2 ? "\n" : " ";
  switch (style(rng)) {
    case 0: text += "[" + body + "]"; break;
    case 1: text += "```python\n[" + body + "]\n```"; break;
    case 2: text += "edges = [" + body + "]"; break;
    default: text += body; break;
  }
  text += style(rng) % 2 ? "\n" : " ";
  text += kProse[pick(rng)];
  return text;
}

Outcome CodecRoundTrip() {
  Outcome out;
  std::mt19937_64 rng(44);
  std::uniform_int_distribution<int> size(1, 30);
  std::uniform_real_distribution<double> density(0.05, 0.6);
  int total = 0;
  for (WeightKind kind : {WeightKind::kNone, WeightKind::kWeight, WeightKind::kCapacity}) {
    for (int i = 0; i < 1000; ++i) {
      const bool directed = i % 2 == 1;
      Graph g = oracle::RandomGraph(rng, directed, size(rng), density(rng), kind, 100);
      if (g.edge_count() == 0) {
        g = Graph::Build(directed, 2,
                         {{0, 1, kind == WeightKind::kNone ? std::nullopt
                                                           : std::optional<int>(3)}},
                         kind);
      }
      const std::string text = Fuzz(RenderEdgeList(g), rng);
      const ExtractionResult r = ExtractGraph(text, kind, directed);
      const auto* got = std::get_if<ExtractedGraph>(&r);
      ++total;
      if (!got) {
        out.Fail(std::string(WeightKindName(kind)) + " graph " + std::to_string(i) +
                 " did not parse: " + std::get<ParseFailure>(r).reason);
      } else if (!GraphsEqual(got->graph, g)) {
        out.Fail(std::string(WeightKindName(kind)) + " graph " + std::to_string(i) +
                 " changed in the round trip");
      }
    }
  }
  out.note = std::to_string(total) + " graphs";
  return out;
}

// ---------------------------------------------------------------------------
// 5. Oracle backend end to end.

std::vector<TaskInstance> Corpus(int count, std::vector<SizeClass> sizes,
                                 std::uint64_t seed) {
  return testing::SmallCorpus(count, std::move(sizes), seed);
}

Outcome OracleSoundness(const std::filesystem::path& scratch) {
  Outcome out;
  const auto corpus = Corpus(50, {SizeClass::kWithinLimit, SizeClass::kExceedsLimit}, 5);
  testing::WriteGraphFiles(corpus, scratch / "oracle");
  const ToolRegistry registry = ToolRegistry::Default();
  OracleBackend oracle(corpus, registry);
  PipelineOptions options;
  options.graph_root = scratch / "oracle";
  const auto traces = RunPipelines(corpus, oracle, registry, options, 2);
  std::vector<EvalRecord> records;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    records.push_back(ScoreTrace(traces[i], corpus[i]));
    if (records.back().category != Category::kCorrect) {
      out.Fail(corpus[i].id + " scored " +
               std::string(CategoryName(records.back().category)));
    }
  }
  const Report report = Aggregate(records, corpus);
  for (const SliceReport& s : report.slices) {
    const Accuracies& a = s.acc;
    if (a.answer != 100.0 || a.graph != 100.0 || a.name != 100.0 ||
        (a.param && *a.param != 100.0)) {
      out.Fail(TaskKindName(s.kind) + "/" + std::string(SizeClassName(s.size_class)) +
               " below 100%");
    }
  }
  out.note = std::to_string(corpus.size()) + " instances over " +
             std::to_string(report.slices.size()) + " slices";
  return out;
}

// ---------------------------------------------------------------------------
// 6 and 8. Fault-injected dataset building.

// Re-derives from raw model output, without the trace's parsed fields,
// whether an instance reproduces every gold label and the gold answer.
bool SurvivesReexecution(const PipelineTrace& t, const TaskInstance& inst,
                         const ToolRegistry& registry,
                         const std::filesystem::path& graph_root) {
  const std::size_t stages = inst.basic_analysis() ? 2 : 3;
  if (t.stages.size() != stages) return false;
  Graph graph;
  const std::string& g_out = t.stages[0].raw_output;
  if (inst.size_class == SizeClass::kWithinLimit) {
    const auto r = ExtractGraph(g_out, ToolWeightKind(inst.kind.tool), inst.kind.directed);
    const auto* eg = std::get_if<ExtractedGraph>(&r);
    if (!eg) return false;
    graph = eg->graph;
  } else {
    const auto r = ExtractFilePath(g_out);
    const auto* path = std::get_if<ExtractedPath>(&r);
    if (!path || path->path != *inst.graph_file) return false;
    graph = ReadElGraphFile(graph_root / path->path, ToolWeightKind(inst.kind.tool));
  }
  if (!GraphsEqual(graph, inst.gold_graph)) return false;
  const auto name_r = ExtractToolName(t.stages[1].raw_output);
  const auto* name = std::get_if<ExtractedName>(&name_r);
  if (!name) return false;
  const ToolSpec* spec = registry.Find(name->name);
  if (!spec || spec->name != ToolNameString(inst.gold_tool)) return false;
  std::vector<std::int64_t> params;
  if (stages == 3) {
    const auto p = ExtractParameters(t.stages[2].raw_output, *spec);
    const auto* ep = std::get_if<ExtractedParams>(&p);
    if (!ep || ep->values != inst.gold_params) return false;
    params = ep->values;
  }
  try {
    return Dispatch(spec->name, graph, params) == inst.gold_answer;
  } catch (const Error&) {
    return false;
  }
}

// Probability that no fault fires on `inst` when every mode fires with q.
double ExpectedSurvival(const TaskInstance& inst, double q) {
  double s = 1.0 - q;  // garbage on G
  if (inst.size_class == SizeClass::kWithinLimit && inst.graph.edge_count() >= 2) {
    s *= 1.0 - q;  // dropped edges
  }
  s *= (1.0 - q) * (1.0 - q);  // N: wrong name, garbage
  if (!inst.basic_analysis()) {
    s *= 1.0 - q;
    if (inst.gold_params.size() == 2 && inst.gold_params[0] != inst.gold_params[1]) {
      s *= 1.0 - q;
    }
  }
  return s;
}

struct FaultRun {
  std::vector<TaskInstance> corpus;
  std::vector<PipelineTrace> traces;
  DatasetResult dataset;
};

Outcome MatchingSoundness(const std::filesystem::path& scratch, FaultRun& run) {
  Outcome out;
  run.corpus = Corpus(50, {SizeClass::kWithinLimit, SizeClass::kExceedsLimit}, 6);
  const auto root = scratch / "fault";
  testing::WriteGraphFiles(run.corpus, root);

  const ToolRegistry registry = ToolRegistry::Default();
  // Stages with two applicable modes are corrupted with probability 0.2.
  const double q = 1.0 - std::sqrt(0.8);
  FaultPlan plan;
  for (FaultMode m : {FaultMode::kDropGraphEdges, FaultMode::kWrongToolName,
                      FaultMode::kSwapParameters, FaultMode::kEmitGarbage}) {
    plan.probability[m] = q;
  }
  auto oracle = std::make_shared<OracleBackend>(run.corpus, registry);
  FaultBackend backend(oracle, plan, 606);
  PipelineOptions options;
  options.graph_root = root;
  run.traces = RunPipelines(run.corpus, backend, registry, options, 2);
  run.dataset = BuildDataset(run.traces, run.corpus);

  std::set<std::string> retained;
  for (const DatasetEntry& e : run.dataset.entries) retained.insert(e.instance_id);
  int survivors = 0;
  double expected = 0.0;
  for (std::size_t i = 0; i < run.corpus.size(); ++i) {
    const TaskInstance& inst = run.corpus[i];
    const bool survives = SurvivesReexecution(run.traces[i], inst, registry, root);
    survivors += survives;
    expected += ExpectedSurvival(inst, q);
    if (retained.count(inst.id) && !survives) out.Fail(inst.id + " retained falsely");
  }
  const double n = static_cast<double>(run.corpus.size());
  const double retained_pct = 100.0 * retained.size() / n;
  const double survival_pct = 100.0 * survivors / n;
  const double expected_pct = 100.0 * expected / n;
  if (std::abs(retained_pct - survival_pct) > 5.0) {
    out.Fail("retained " + std::to_string(retained_pct) + "% vs re-execution " +
             std::to_string(survival_pct) + "%");
  }
  if (std::abs(retained_pct - expected_pct) > 5.0) {
    out.Fail("retained " + std::to_string(retained_pct) + "% vs expected " +
             std::to_string(expected_pct) + "%");
  }
  char note[160];
  std::snprintf(note, sizeof(note),
                "%zu instances, retained %.1f%%, re-execution %.1f%%, expected %.1f%%",
                run.corpus.size(), retained_pct, survival_pct, expected_pct);
  out.note = note;
  return out;
}

Outcome AlpacaValidity(const std::filesystem::path& scratch, const FaultRun& run) {
  Outcome out;
  const auto path = scratch / "alpaca.json";
  ExportAlpaca(run.dataset.entries, path);
  const std::string bytes = ReadFile(path);
  Json doc;
  try {
    doc = Json::parse(bytes);
  } catch (const Json::exception& e) {
    out.Fail(std::string("export does not parse: ") + e.what());
    return out;
  }
  if (!doc.is_array() || doc.size() != run.dataset.entries.size()) {
    out.Fail("export is not an array of every entry");
  }
  for (const Json& row : doc) {
    if (!row.is_object() || row.size() != 3 || !row.contains("instruction") ||
        !row.contains("input") || !row.contains("output") ||
        !row["instruction"].is_string() || !row["input"].is_string() ||
        !row["output"].is_string()) {
      out.Fail("malformed entry " + row.dump().substr(0, 80));
    }
  }
  std::map<std::string, std::size_t> per_instance;
  for (const DatasetEntry& e : run.dataset.entries) ++per_instance[e.instance_id];
  for (std::size_t i = 0; i < run.corpus.size(); ++i) {
    const TaskInstance& inst = run.corpus[i];
    const auto it = per_instance.find(inst.id);
    const std::size_t kept = it == per_instance.end() ? 0 : it->second;
    const bool match = MatchingFunction(run.traces[i], inst);
    if (kept != (match ? run.traces[i].stages.size() : 0)) {
      out.Fail(inst.id + " kept " + std::to_string(kept) + " entries");
    }
  }
  // Through serialized traces and a second export.
  WriteTraces(scratch / "traces.jsonl", run.traces);
  const DatasetResult again = BuildDataset(ReadTraces(scratch / "traces.jsonl"), run.corpus);
  ExportAlpaca(again.entries, scratch / "alpaca2.json");
  if (ReadFile(scratch / "alpaca2.json") != bytes) out.Fail("re-export differs");
  out.note = std::to_string(doc.size()) + " entries from " +
             std::to_string(per_instance.size()) + " instances";
  return out;
}

// ---------------------------------------------------------------------------
// 7. Single-fault traces are categorized as injected.

Outcome TaxonomyFidelity(const std::filesystem::path& scratch) {
  Outcome out;
  const auto corpus = Corpus(50, {SizeClass::kWithinLimit}, 7);
  const ToolRegistry registry = ToolRegistry::Default();
  auto oracle = std::make_shared<OracleBackend>(corpus, registry);
  PipelineOptions options;
  options.graph_root = scratch;
  std::string counts;
  for (FaultMode mode : {FaultMode::kDropGraphEdges, FaultMode::kWrongToolName,
                         FaultMode::kSwapParameters, FaultMode::kEmitGarbage}) {
    FaultPlan plan;
    plan.probability[mode] = mode == FaultMode::kEmitGarbage ? 0.3 : 1.0;
    FaultBackend backend(oracle, plan, 700 + static_cast<int>(mode));
    const auto traces = RunPipelines(corpus, backend, registry, options, 2);
    std::vector<EvalRecord> records;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      records.push_back(ScoreTrace(traces[i], corpus[i]));
    }
    const LabelAgreement a = CompareWithLabels(records, backend.Labels());
    const auto [agreed, total] = a.per_mode.count(mode) ? a.per_mode.at(mode)
                                                        : std::make_pair(0, 0);
    if (total < 200) {
      out.Fail(std::string(FaultModeName(mode)) + ": only " + std::to_string(total) +
               " single-fault traces");
    }
    if (agreed != total || a.agreed != a.single_fault) {
      out.Fail(std::string(FaultModeName(mode)) + ": " + std::to_string(agreed) + "/" +
               std::to_string(total) + " agree");
    }
    if (!counts.empty()) counts += ", ";
    counts += std::string(FaultModeName(mode)) + " " + std::to_string(agreed) + "/" +
              std::to_string(total);
  }
  out.note = counts;
  return out;
}

// ---------------------------------------------------------------------------
// 9. Live endpoint.

Outcome LiveEndpoint() {
  Outcome out;
  const char* endpoint = std::getenv("GRAPHTOOL_ENDPOINT");
  if (!endpoint || !*endpoint) {
    out.skipped = true;
    out.note = "GRAPHTOOL_ENDPOINT is not set";
    return out;
  }
  const auto corpus = Corpus(5, {SizeClass::kWithinLimit}, 9);
  PipelineOptions options;
  options.completion.endpoint = endpoint;
  if (const char* m = std::getenv("GRAPHTOOL_MODEL")) options.completion.model = m;
  if (const char* k = std::getenv("GRAPHTOOL_API_KEY")) options.completion.api_key = k;
  const ToolRegistry registry = ToolRegistry::Default();
  ChatCompletionsBackend backend(4);
  try {
    const auto traces = RunPipelines(corpus, backend, registry, options, 4);
    std::vector<EvalRecord> records;
    int backend_errors = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      records.push_back(ScoreTrace(traces[i], corpus[i]));
      for (const StageRecord& s : traces[i].stages) backend_errors += s.backend_error.has_value();
    }
    std::cout << RenderReport(Aggregate(records, corpus), "txt");
    out.note = std::to_string(corpus.size()) + " instances, " +
               std::to_string(backend_errors) + " backend errors";
  } catch (const std::exception& e) {
    out.Fail(e.what());
  }
  return out;
}

// ---------------------------------------------------------------------------

struct Criterion {
  int number;
  std::string name;
  double limit_seconds;  // 0 for none
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace graphtool

int main() {
  using namespace graphtool;
  graphtool::testing::TempDir scratch;
  FaultRun fault_run;
  const std::vector<Criterion> criteria = {
      {1, "tool-oracle equivalence", 60, ToolOracleEquivalence},
      {2, "max-flow equals min-cut", 30, MaxFlowMinCut},
      {3, "generator constraints", 300, GeneratorConstraints},
      {4, "codec round trip", 30, CodecRoundTrip},
      {5, "oracle end-to-end soundness", 120, [&] { return OracleSoundness(scratch.path()); }},
      {6, "matching-function soundness", 180,
       [&] { return MatchingSoundness(scratch.path(), fault_run); }},
      {7, "error-taxonomy fidelity", 0, [&] { return TaxonomyFidelity(scratch.path()); }},
      {8, "alpaca export validity", 0, [&] { return AlpacaValidity(scratch.path(), fault_run); }},
      {9, "live endpoint run", 0, LiveEndpoint},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out.Fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    if (!out.skipped && c.limit_seconds > 0 && seconds > c.limit_seconds) {
      out.Fail("took longer than " + std::to_string(static_cast<int>(c.limit_seconds)) + " s");
    }
    const char* verdict = out.skipped ? "SKIP" : out.ok() ? "PASS" : "FAIL";
    std::printf("%s %d %s (%.1f s)%s%s\n", verdict, c.number, c.name.c_str(), seconds,
                out.note.empty() ? "" : ": ", out.note.c_str());
    for (const std::string& p : out.problems) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
    if (!out.skipped && !out.ok()) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
