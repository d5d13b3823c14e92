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

#include "graphtool/cli.h"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "graphtool/backend.h"
#include "graphtool/chat_client.h"
#include "graphtool/codec.h"
#include "graphtool/dataset.h"
#include "graphtool/errors.h"
#include "graphtool/evaluator.h"
#include "graphtool/generator.h"
#include "graphtool/io.h"
#include "graphtool/pipeline.h"
#include "graphtool/serialization.h"
#include "graphtool/tasks.h"
#include "graphtool/tool_registry.h"

namespace graphtool {
namespace {

namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LogLevel { kError, kWarn, kInfo };

struct Logger {
  LogLevel level = LogLevel::kInfo;
  void Info(const std::string& msg) const {
    if (level >= LogLevel::kInfo) std::cerr << "graphtool: " << msg << '\n';
  }
  void Warn(const std::string& msg) const {
    if (level >= LogLevel::kWarn) std::cerr << "graphtool: warning: " << msg << '\n';
  }
};

int DefaultWorkers() {
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::vector<TaskKind> ParseTaskList(const std::string& spec) {
  if (spec == "all") return AllTaskKinds();
  std::vector<TaskKind> kinds;
  std::string_view rest = spec;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? "" : rest.substr(comma + 1);
    if (item.empty()) continue;
    if (item.find('/') != std::string_view::npos) {
      const auto kind = ParseTaskKind(item);
      if (!kind || !IsValidKind(*kind)) {
        throw UsageError("unknown task kind '" + std::string(item) + "'");
      }
      kinds.push_back(*kind);
      continue;
    }
    const auto tool = ParseToolName(item);
    if (!tool) throw UsageError("unknown task '" + std::string(item) + "'");
    for (bool directed : {false, true}) {
      const TaskKind kind{*tool, directed};
      if (IsValidKind(kind)) kinds.push_back(kind);
    }
  }
  std::sort(kinds.begin(), kinds.end(), [](const TaskKind& a, const TaskKind& b) {
    const auto& all = AllTaskKinds();
    return std::find(all.begin(), all.end(), a) < std::find(all.begin(), all.end(), b);
  });
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
  if (kinds.empty()) throw UsageError("--tasks selects no task kind");
  return kinds;
}

std::vector<SizeClass> ParseSizes(const std::string& size) {
  if (size == "wl") return {SizeClass::kWithinLimit};
  if (size == "el") return {SizeClass::kExceedsLimit};
  return {SizeClass::kWithinLimit, SizeClass::kExceedsLimit};
}

// Writes EL graph files below `root`; instances without a file are skipped.
void WriteGraphFiles(const std::vector<TaskInstance>& instances,
                     const fs::path& root) {
  for (const TaskInstance& inst : instances) {
    if (inst.graph_file) WriteElGraphFile(inst.graph, root / *inst.graph_file);
  }
}

struct GenerateArgs {
  std::string tasks = "all";
  int count = 2000;
  std::uint64_t seed = 0;
  std::string size = "wl";
  std::string out;
  int workers = DefaultWorkers();
  GenConfig gen;
};

struct BackendArgs {
  std::string backend = "http";
  CompletionConfig completion;
  std::string fault_plan;
  std::uint64_t fault_seed = 0;
  std::string fault_labels;
  int workers = DefaultWorkers();
  std::string graph_root;
};

struct RunArgs {
  std::string corpus;
  std::string out;
  int limit = -1;
  BackendArgs backend;
};

struct DatasetArgs {
  std::string traces;
  std::string corpus;
  std::string out;
  std::string stats;
  int fill_quota = 0;
  int max_rounds = 5;
  std::uint64_t seed = 0;
  BackendArgs backend;
};

struct EvaluateArgs {
  std::string traces;
  std::string corpus;
  std::string out;
  std::string fault_labels;
};

struct ReportArgs {
  std::string in;
  std::string format = "txt";
};

void AddBackendOptions(CLI::App* cmd, BackendArgs& a) {
  cmd->add_option("--backend", a.backend, "Completion backend")
      ->check(CLI::IsMember({"http", "oracle", "fault"}))
      ->capture_default_str();
  cmd->add_option("--endpoint", a.completion.endpoint,
                  "Chat-completions base URL (env GRAPHTOOL_ENDPOINT)");
  cmd->add_option("--model", a.completion.model,
                  "Model name sent with each request (env GRAPHTOOL_MODEL)");
  cmd->add_option("--api-key", a.completion.api_key,
                  "Bearer token (env GRAPHTOOL_API_KEY)");
  cmd->add_option("--max-new-tokens", a.completion.max_new_tokens)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--top-p", a.completion.top_p)
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("--temperature", a.completion.temperature)
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--retries", a.completion.retry_count,
                  "Retries after a failed request")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--timeout-ms", a.completion.timeout_ms)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--fault-plan", a.fault_plan,
                  "Fault backend plan, e.g. drop_graph_edges=0.2,emit_garbage=0.1");
  cmd->add_option("--fault-seed", a.fault_seed)->capture_default_str();
  cmd->add_option("--fault-labels", a.fault_labels,
                  "Where the fault backend writes its injected labels");
  cmd->add_option("--workers", a.workers, "Concurrent instances")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--graph-root", a.graph_root,
                  "Directory EL graph paths resolve against "
                  "(default: the corpus directory)");
}

// Owns whichever backend the flags select.
struct BackendHandle {
  std::unique_ptr<LlmBackend> owned;
  std::shared_ptr<OracleBackend> oracle;
  FaultBackend* fault = nullptr;
  LlmBackend* backend = nullptr;
};

BackendHandle MakeBackend(const BackendArgs& a,
                          const std::vector<TaskInstance>& corpus) {
  BackendHandle h;
  if (a.backend == "http") {
    if (a.completion.endpoint.empty()) {
      throw UsageError("--backend http needs --endpoint or GRAPHTOOL_ENDPOINT");
    }
    h.owned = std::make_unique<ChatCompletionsBackend>(a.workers);
    h.backend = h.owned.get();
    return h;
  }
  h.oracle = std::make_shared<OracleBackend>(corpus, ToolRegistry::Default());
  if (a.backend == "oracle") {
    h.backend = h.oracle.get();
    return h;
  }
  auto fault = std::make_unique<FaultBackend>(
      h.oracle, FaultPlan::Parse(a.fault_plan), a.fault_seed);
  h.fault = fault.get();
  h.owned = std::move(fault);
  h.backend = h.owned.get();
  return h;
}

PipelineOptions MakePipelineOptions(const BackendArgs& a,
                                    const std::string& corpus_path) {
  PipelineOptions options;
  options.completion = a.completion;
  options.completion.max_in_flight = a.workers;
  options.graph_root = a.graph_root.empty()
                           ? fs::path(corpus_path).parent_path()
                           : fs::path(a.graph_root);
  if (options.graph_root.empty()) options.graph_root = ".";
  return options;
}

void DoGenerate(GenerateArgs& a, const Logger& log) {
  a.gen.kinds = ParseTaskList(a.tasks);
  a.gen.sizes = ParseSizes(a.size);
  a.gen.count_per_kind = a.count;
  a.gen.seed = a.seed;
  a.gen.Validate();
  const fs::path out(a.out);
  std::vector<TaskInstance> corpus;
  corpus.reserve(a.gen.kinds.size() * a.gen.sizes.size() * a.count);
  GenerateCorpus(
      a.gen, [&corpus](TaskInstance&& inst) { corpus.push_back(std::move(inst)); },
      a.workers);
  WriteGraphFiles(corpus, out);
  WriteCorpus(out / "corpus.jsonl", corpus);
  log.Info("wrote " + std::to_string(corpus.size()) + " instances to " +
           (out / "corpus.jsonl").string());
}

void WriteLabels(const BackendHandle& h, const std::string& path) {
  if (h.fault && !path.empty()) WriteFaultLabels(path, h.fault->Labels());
}

void DoRun(RunArgs& a, const Logger& log) {
  std::vector<TaskInstance> corpus = ReadCorpus(a.corpus);
  if (a.limit >= 0 && static_cast<std::size_t>(a.limit) < corpus.size()) {
    corpus.resize(a.limit);
  }
  a.backend.completion.Validate();
  BackendHandle h = MakeBackend(a.backend, corpus);
  const PipelineOptions options = MakePipelineOptions(a.backend, a.corpus);
  log.Info("running " + std::to_string(corpus.size()) + " instances with the " +
           a.backend.backend + " backend on " + std::to_string(a.backend.workers) +
           " worker(s)");
  const auto traces = RunPipelines(corpus, *h.backend, ToolRegistry::Default(),
                                   options, a.backend.workers);
  int answered = 0;
  for (const PipelineTrace& t : traces) answered += t.tool_result.has_value();
  WriteTraces(a.out, traces);
  std::string labels = a.backend.fault_labels;
  if (h.fault && labels.empty()) labels = a.out + ".faults.jsonl";
  WriteLabels(h, labels);
  log.Info("wrote " + std::to_string(traces.size()) + " traces to " + a.out +
           " (" + std::to_string(answered) + " produced a tool result)");
}

// Regenerates instances for slices below `quota` retained instances and runs
// them through the backend, up to `max_rounds` rounds.
void FillQuota(DatasetArgs& a, std::vector<TaskInstance>& corpus,
               std::vector<PipelineTrace>& traces, DatasetResult& result,
               const Logger& log) {
  a.backend.completion.Validate();
  const PipelineOptions options = MakePipelineOptions(a.backend, a.corpus);
  GenConfig gen;
  gen.seed = a.seed;
  std::int64_t next_index = 0;
  std::map<std::pair<SizeClass, TaskKind>, std::int64_t> next_ordinal;
  for (const TaskInstance& inst : corpus) {
    if (inst.id.size() > 1 && inst.id[0] == 'q') {
      try {
        next_index = std::max<std::int64_t>(next_index, std::stoll(inst.id.substr(1)) + 1);
      } catch (const std::exception&) {
      }
    }
    ++next_ordinal[{inst.size_class, inst.kind}];
  }
  next_index = std::max<std::int64_t>(next_index, corpus.size());

  for (int round = 1; round <= a.max_rounds; ++round) {
    std::vector<TaskInstance> fresh;
    for (auto& [slice, ordinal] : next_ordinal) {
      const std::string key =
          TaskKindName(slice.second) + "/" + std::string(SizeClassName(slice.first));
      const auto it = result.stats.per_slice.find(key);
      const int retained = it == result.stats.per_slice.end() ? 0 : it->second.retained;
      for (int k = retained; k < a.fill_quota; ++k, ++ordinal) {
        Rng rng(InstanceSeed(gen.seed, slice.second, slice.first, ordinal));
        fresh.push_back(GenerateInstance(slice.second, slice.first, ordinal,
                                         InstanceId(next_index++), gen, rng));
      }
    }
    if (fresh.empty()) return;
    log.Info("fill-quota round " + std::to_string(round) + ": " +
             std::to_string(fresh.size()) + " new instances");
    WriteGraphFiles(fresh, options.graph_root);
    corpus.insert(corpus.end(), fresh.begin(), fresh.end());
    BackendHandle h = MakeBackend(a.backend, corpus);
    auto more = RunPipelines(fresh, *h.backend, ToolRegistry::Default(),
                             options, a.backend.workers);
    traces.insert(traces.end(), std::make_move_iterator(more.begin()),
                  std::make_move_iterator(more.end()));
    result = BuildDataset(traces, corpus);
  }
  log.Warn("quota still unmet after " + std::to_string(a.max_rounds) + " round(s)");
}

void DoBuildDataset(DatasetArgs& a, const Logger& log) {
  std::vector<TaskInstance> corpus = ReadCorpus(a.corpus);
  std::vector<PipelineTrace> traces = ReadTraces(a.traces);
  DatasetResult result = BuildDataset(traces, corpus);
  if (a.fill_quota > 0) {
    FillQuota(a, corpus, traces, result, log);
    const fs::path dir = fs::path(a.out).parent_path();
    WriteCorpus(dir / "corpus.filled.jsonl", corpus);
    WriteTraces(dir / "traces.filled.jsonl", traces);
  }
  ExportAlpaca(result.entries, a.out);
  if (!a.stats.empty()) {
    WriteFileAtomic(a.stats, result.stats.ToJson().dump(2) + "\n");
  }
  log.Info("retained " + std::to_string(result.stats.total.retained) + " of " +
           std::to_string(result.stats.total.traced) + " traced instances (" +
           std::to_string(result.stats.entries) + " entries) in " + a.out);
}

void DoEvaluate(const EvaluateArgs& a, const Logger& log) {
  const std::vector<TaskInstance> corpus = ReadCorpus(a.corpus);
  const std::vector<PipelineTrace> traces = ReadTraces(a.traces);
  std::unordered_map<std::string, const TaskInstance*> by_id;
  for (const TaskInstance& inst : corpus) by_id.emplace(inst.id, &inst);
  std::vector<EvalRecord> records;
  std::vector<Json> rows;
  for (const PipelineTrace& t : traces) {
    const auto it = by_id.find(t.instance_id);
    if (it == by_id.end()) {
      throw Error(ErrorCode::kOrphanTrace,
                  "trace " + t.instance_id + " has no corpus instance");
    }
    records.push_back(ScoreTrace(t, *it->second));
    rows.push_back(RecordToJson(records.back()));
  }
  const Report report = Aggregate(records, corpus);
  const fs::path out(a.out);
  WriteJsonl(out / "records.jsonl", rows);
  WriteFileAtomic(out / "report.json", report.ToJson().dump(2) + "\n");
  WriteFileAtomic(out / "report.txt", RenderReport(report, "txt"));
  WriteFileAtomic(out / "report.md", RenderReport(report, "md"));
  if (!a.fault_labels.empty()) {
    const LabelAgreement agreement =
        CompareWithLabels(records, ReadFaultLabels(a.fault_labels));
    WriteFileAtomic(out / "label_agreement.json", agreement.ToJson().dump(2) + "\n");
    log.Info("category agrees with the injected label on " +
             std::to_string(agreement.agreed) + " of " +
             std::to_string(agreement.single_fault) + " single-fault traces");
  }
  std::cout << RenderReport(report, "txt");
}

void DoReport(const ReportArgs& a) {
  const std::string text = ReadFile(fs::path(a.in) / "report.json");
  const Json j = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw Error(ErrorCode::kMalformedLine, a.in + "/report.json is not JSON");
  }
  std::cout << RenderReport(Report::FromJson(j), a.format);
}

// Environment values enter as synthetic flags right after the subcommand
// unless the flag is already on the command line, so explicit flags win and
// both beat the config file.
std::vector<std::string> InjectEnv(const std::vector<std::string>& args) {
  static const std::set<std::string> kBackendCommands = {"run", "build-dataset"};
  const std::pair<std::string_view, std::string> kMapping[] = {
      {kEndpointEnv, "--endpoint"},
      {kApiKeyEnv, "--api-key"},
      {kModelEnv, "--model"},
  };
  std::vector<std::string> out = args;
  auto sub = std::find_if(out.begin() + 1, out.end(), [](const std::string& s) {
    return kBackendCommands.count(s) > 0;
  });
  if (sub == out.end()) return out;
  const std::ptrdiff_t pos = sub - out.begin() + 1;
  for (const auto& [env, flag] : kMapping) {
    const char* value = std::getenv(std::string(env).c_str());
    if (!value || !*value) continue;
    const bool given = std::any_of(out.begin(), out.end(), [&](const std::string& s) {
      return s == flag || s.rfind(flag + "=", 0) == 0;
    });
    if (!given) out.insert(out.begin() + pos, flag + "=" + value);
  }
  return out;
}

}  // namespace

int RunCli(int argc, const char* const* argv) {
  CLI::App app{"Graph reasoning with staged tool instructions: corpus "
               "generation, pipeline runs, dataset building and evaluation.",
               "graphtool"};
  app.footer(
      "Settings precedence: command-line flags, then environment variables "
      "(GRAPHTOOL_ENDPOINT, GRAPHTOOL_API_KEY, GRAPHTOOL_MODEL), then the "
      "--config file.");
  app.set_version_flag("--version", "graphtool " + std::string(kVersion));
  app.set_config("--config", "", "Optional TOML or INI configuration file");
  app.require_subcommand(1);
  std::string log_level = "info";
  app.add_option("--log-level", log_level, "Diagnostics on stderr")
      ->check(CLI::IsMember({"error", "warn", "info"}))
      ->capture_default_str();

  GenerateArgs gen_args;
  CLI::App* gen = app.add_subcommand("generate", "Generate a task corpus");
  gen->add_option("--tasks", gen_args.tasks,
                  "all, or a comma list of tools or tool/directed|undirected kinds")
      ->capture_default_str();
  gen->add_option("--count", gen_args.count, "Instances per kind and size class")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--seed", gen_args.seed)->capture_default_str();
  gen->add_option("--size", gen_args.size, "Size classes")
      ->check(CLI::IsMember({"wl", "el", "both"}))
      ->capture_default_str();
  gen->add_option("--out", gen_args.out, "Output directory")->required();
  gen->add_option("--workers", gen_args.workers)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  gen->add_option("--edge-prob-min", gen_args.gen.edge_probability_min)
      ->capture_default_str();
  gen->add_option("--edge-prob-max", gen_args.gen.edge_probability_max)
      ->capture_default_str();
  gen->add_option("--weight-min", gen_args.gen.weight_min)->capture_default_str();
  gen->add_option("--weight-max", gen_args.gen.weight_max)->capture_default_str();
  gen->add_option("--token-budget", gen_args.gen.token_budget)->capture_default_str();

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "Run the staged pipeline over a corpus");
  run->add_option("--corpus", run_args.corpus, "corpus.jsonl")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("--out", run_args.out, "Trace file (JSONL)")->required();
  run->add_option("--limit", run_args.limit, "Only the first N instances");
  AddBackendOptions(run, run_args.backend);

  DatasetArgs ds_args;
  CLI::App* ds = app.add_subcommand("build-dataset",
                                    "Filter traces into an Alpaca-format dataset");
  ds->add_option("--traces", ds_args.traces)->required()->check(CLI::ExistingFile);
  ds->add_option("--corpus", ds_args.corpus)->required()->check(CLI::ExistingFile);
  ds->add_option("--out", ds_args.out, "Alpaca JSON file")->required();
  ds->add_option("--stats", ds_args.stats, "Retention statistics (JSON)");
  ds->add_option("--fill-quota", ds_args.fill_quota,
                 "Regenerate and rerun until every slice retains N instances")
      ->check(CLI::NonNegativeNumber);
  ds->add_option("--max-rounds", ds_args.max_rounds)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  ds->add_option("--seed", ds_args.seed, "Generation seed of the corpus")
      ->capture_default_str();
  AddBackendOptions(ds, ds_args.backend);

  EvaluateArgs ev_args;
  CLI::App* ev = app.add_subcommand("evaluate", "Score traces and write reports");
  ev->add_option("--traces", ev_args.traces)->required()->check(CLI::ExistingFile);
  ev->add_option("--corpus", ev_args.corpus)->required()->check(CLI::ExistingFile);
  ev->add_option("--out", ev_args.out, "Report directory")->required();
  ev->add_option("--fault-labels", ev_args.fault_labels,
                 "Compare categories with injected fault labels")
      ->check(CLI::ExistingFile);

  ReportArgs rep_args;
  CLI::App* rep = app.add_subcommand("report", "Print a written report");
  rep->add_option("--in", rep_args.in, "Directory written by evaluate")
      ->required()
      ->check(CLI::ExistingDirectory);
  rep->add_option("--format", rep_args.format)
      ->check(CLI::IsMember({"txt", "md"}))
      ->capture_default_str();

  std::vector<std::string> args(argv, argv + argc);
  args = InjectEnv(args);
  std::vector<const char*> raw;
  for (const std::string& s : args) raw.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    if (app.get_subcommands().empty()) std::cerr << '\n' << app.help();
    return 2;
  }

  Logger log;
  log.level = log_level == "error" ? LogLevel::kError
              : log_level == "warn" ? LogLevel::kWarn
                                    : LogLevel::kInfo;
  try {
    if (*gen) DoGenerate(gen_args, log);
    else if (*run) DoRun(run_args, log);
    else if (*ds) DoBuildDataset(ds_args, log);
    else if (*ev) DoEvaluate(ev_args, log);
    else if (*rep) DoReport(rep_args);
  } catch (const UsageError& e) {
    std::cerr << "graphtool: usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "graphtool: error: " << ErrorCodeName(e.code()) << ": "
              << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "graphtool: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

}  // namespace graphtool
