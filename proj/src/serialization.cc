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

#include "graphtool/serialization.h"

#include <sstream>
#include <string>

#include "graphtool/errors.h"
#include "graphtool/io.h"

namespace graphtool {
namespace {

[[noreturn]] void Malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedLine, what);
}

// Wraps nlohmann accessors so schema errors surface as library errors.
template <typename T>
T Get(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    Malformed(std::string("field '") + key + "': " + e.what());
  }
}

const Json& At(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Malformed(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::vector<std::int64_t> IntList(const Json& j, const char* key) {
  return Get<std::vector<std::int64_t>>(j, key);
}

}  // namespace

Json GraphToJson(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    if (e.weight) {
      edges.push_back({e.u, e.v, *e.weight});
    } else {
      edges.push_back({e.u, e.v});
    }
  }
  Json j = {{"directed", g.directed()},
            {"node_count", g.node_count()},
            {"weight_kind", WeightKindName(g.weight_kind())},
            {"edges", std::move(edges)}};
  if (g.node_count_inferred()) j["node_count_inferred"] = true;
  return j;
}

Graph GraphFromJson(const Json& j) {
  const bool directed = Get<bool>(j, "directed");
  const auto kind = ParseWeightKind(Get<std::string>(j, "weight_kind"));
  if (!kind) Malformed("unknown weight_kind");
  std::vector<Edge> edges;
  for (const Json& e : At(j, "edges")) {
    if (!e.is_array() || (e.size() != 2 && e.size() != 3)) {
      Malformed("edge must be [u, v] or [u, v, w]");
    }
    try {
      Edge edge{e[0].get<int>(), e[1].get<int>(), std::nullopt};
      if (e.size() == 3) edge.weight = e[2].get<int>();
      edges.push_back(edge);
    } catch (const Json::exception&) {
      Malformed("edge endpoints and weights must be integers");
    }
  }
  try {
    if (j.value("node_count_inferred", false)) {
      return Graph::FromEdgeList(directed, std::move(edges), *kind);
    }
    return Graph::Build(directed, Get<int>(j, "node_count"), std::move(edges),
                        *kind);
  } catch (const Error& e) {
    Malformed(std::string("invalid graph: ") + e.what());
  }
}

Json AnswerToJson(const Answer& answer) {
  return std::visit(
      [](const auto& a) -> Json {
        using T = std::decay_t<decltype(a)>;
        const char* type = std::is_same_v<T, BoolAnswer>    ? "bool"
                           : std::is_same_v<T, CountAnswer> ? "count"
                           : std::is_same_v<T, NodeSeqAnswer> ? "nodes"
                                                              : "value";
        return Json{{"type", type}, {"value", a.value}};
      },
      answer);
}

Answer AnswerFromJson(const Json& j) {
  const auto type = Get<std::string>(j, "type");
  if (type == "bool") return BoolAnswer{Get<bool>(j, "value")};
  if (type == "count") return CountAnswer{Get<std::int64_t>(j, "value")};
  if (type == "nodes") return NodeSeqAnswer{Get<std::vector<NodeId>>(j, "value")};
  if (type == "value") return ValueAnswer{Get<std::int64_t>(j, "value")};
  Malformed("unknown answer type '" + type + "'");
}

Json ExtractionToJson(const ExtractionResult& result) {
  struct Visitor {
    Json operator()(const ExtractedGraph& r) const {
      return {{"kind", "graph"}, {"graph", GraphToJson(r.graph)}};
    }
    Json operator()(const ExtractedName& r) const {
      return {{"kind", "name"}, {"name", r.name}};
    }
    Json operator()(const ExtractedParams& r) const {
      return {{"kind", "params"}, {"values", r.values}};
    }
    Json operator()(const ExtractedPath& r) const {
      return {{"kind", "path"}, {"path", r.path}};
    }
    Json operator()(const ParseFailure& r) const {
      return {{"kind", "failure"}, {"reason", r.reason}};
    }
  };
  return std::visit(Visitor{}, result);
}

ExtractionResult ExtractionFromJson(const Json& j) {
  const auto kind = Get<std::string>(j, "kind");
  if (kind == "graph") return ExtractedGraph{GraphFromJson(At(j, "graph"))};
  if (kind == "name") return ExtractedName{Get<std::string>(j, "name")};
  if (kind == "params") return ExtractedParams{IntList(j, "values")};
  if (kind == "path") return ExtractedPath{Get<std::string>(j, "path")};
  if (kind == "failure") return ParseFailure{Get<std::string>(j, "reason")};
  Malformed("unknown extraction kind '" + kind + "'");
}

Json InstanceToJson(const TaskInstance& instance) {
  Json j = {{"id", instance.id},
            {"kind", TaskKindName(instance.kind)},
            {"size", SizeClassName(instance.size_class)},
            {"description_variant", instance.description_variant},
            {"task_text", instance.task_text},
            {"params", instance.params}};
  if (instance.graph_file) j["graph_file"] = *instance.graph_file;
  j["graph"] = GraphToJson(instance.graph);
  j["gold"] = {{"tool", ToolNameString(instance.gold_tool)},
               {"params", instance.gold_params},
               {"answer", AnswerToJson(instance.gold_answer)}};
  // The gold graph is stored only when it differs from the task graph.
  if (!GraphsEqual(instance.gold_graph, instance.graph)) {
    j["gold"]["graph"] = GraphToJson(instance.gold_graph);
  }
  return j;
}

TaskInstance InstanceFromJson(const Json& j) {
  TaskInstance inst;
  inst.id = Get<std::string>(j, "id");
  const auto kind = ParseTaskKind(Get<std::string>(j, "kind"));
  if (!kind || !IsValidKind(*kind)) Malformed("unknown task kind");
  inst.kind = *kind;
  const auto size = ParseSizeClass(Get<std::string>(j, "size"));
  if (!size) Malformed("unknown size class");
  inst.size_class = *size;
  inst.description_variant = Get<int>(j, "description_variant");
  inst.task_text = Get<std::string>(j, "task_text");
  inst.params = IntList(j, "params");
  if (j.contains("graph_file")) inst.graph_file = Get<std::string>(j, "graph_file");
  inst.graph = GraphFromJson(At(j, "graph"));
  const Json& gold = At(j, "gold");
  const auto tool = ParseToolName(Get<std::string>(gold, "tool"));
  if (!tool) Malformed("unknown gold tool");
  inst.gold_tool = *tool;
  inst.gold_params = IntList(gold, "params");
  inst.gold_answer = AnswerFromJson(At(gold, "answer"));
  inst.gold_graph =
      gold.contains("graph") ? GraphFromJson(gold.at("graph")) : inst.graph;
  return inst;
}

Json TraceToJson(const PipelineTrace& trace) {
  Json stages = Json::array();
  for (const StageRecord& s : trace.stages) {
    Json r = {{"stage", StageKindName(s.stage)},
              {"instruction_text", s.instruction_text},
              {"input", s.input},
              {"prompt", s.prompt},
              {"raw_output", s.raw_output},
              {"parsed", ExtractionToJson(s.parsed)},
              {"latency_ms", s.latency_ms}};
    if (s.backend_error) r["backend_error"] = *s.backend_error;
    stages.push_back(std::move(r));
  }
  Json j = {{"instance_id", trace.instance_id},
            {"skipped_parameter_stage", trace.skipped_parameter_stage},
            {"stages", std::move(stages)}};
  j["graph"] = trace.graph ? GraphToJson(*trace.graph) : Json(nullptr);
  j["tool_result"] =
      trace.tool_result ? AnswerToJson(*trace.tool_result) : Json(nullptr);
  j["tool_error"] = trace.tool_error
                        ? Json{{"code", ErrorCodeName(trace.tool_error->code)},
                               {"message", trace.tool_error->message}}
                        : Json(nullptr);
  return j;
}

PipelineTrace TraceFromJson(const Json& j) {
  PipelineTrace trace;
  trace.instance_id = Get<std::string>(j, "instance_id");
  trace.skipped_parameter_stage = Get<bool>(j, "skipped_parameter_stage");
  for (const Json& r : At(j, "stages")) {
    StageRecord s;
    const auto stage = ParseStageKind(Get<std::string>(r, "stage"));
    if (!stage) Malformed("unknown stage");
    s.stage = *stage;
    s.instruction_text = Get<std::string>(r, "instruction_text");
    s.input = Get<std::string>(r, "input");
    s.prompt = Get<std::string>(r, "prompt");
    s.raw_output = Get<std::string>(r, "raw_output");
    s.parsed = ExtractionFromJson(At(r, "parsed"));
    s.latency_ms = Get<double>(r, "latency_ms");
    if (r.contains("backend_error")) {
      s.backend_error = Get<std::string>(r, "backend_error");
    }
    trace.stages.push_back(std::move(s));
  }
  if (j.contains("graph") && !j["graph"].is_null()) {
    trace.graph = GraphFromJson(j["graph"]);
  }
  if (j.contains("tool_result") && !j["tool_result"].is_null()) {
    trace.tool_result = AnswerFromJson(j["tool_result"]);
  }
  if (j.contains("tool_error") && !j["tool_error"].is_null()) {
    const Json& e = j["tool_error"];
    const auto code = ParseErrorCode(Get<std::string>(e, "code"));
    if (!code) Malformed("unknown tool error code");
    trace.tool_error = ToolFailure{*code, Get<std::string>(e, "message")};
  }
  return trace;
}

Json FaultLabelToJson(const FaultLabel& label) {
  return {{"instance_id", label.instance_id},
          {"stage", StageKindName(label.stage)},
          {"mode", FaultModeName(label.mode)}};
}

FaultLabel FaultLabelFromJson(const Json& j) {
  FaultLabel label;
  label.instance_id = Get<std::string>(j, "instance_id");
  const auto stage = ParseStageKind(Get<std::string>(j, "stage"));
  const auto mode = ParseFaultMode(Get<std::string>(j, "mode"));
  if (!stage || !mode) Malformed("bad fault label");
  label.stage = *stage;
  label.mode = *mode;
  return label;
}

void WriteJsonl(const std::filesystem::path& path,
                const std::vector<Json>& rows) {
  std::string out;
  for (const Json& row : rows) {
    out += row.dump(-1, ' ', false, Json::error_handler_t::replace);
    out += '\n';
  }
  WriteFileAtomic(path, out);
}

std::vector<Json> ReadJsonl(const std::filesystem::path& path) {
  const std::string contents = ReadFile(path);
  std::vector<Json> rows;
  std::istringstream in(contents);
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json row = Json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (row.is_discarded() || !row.is_object()) {
      throw Error(ErrorCode::kMalformedLine,
                  path.string() + ":" + std::to_string(n) + ": not a JSON object");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

template <typename T, typename Decode>
std::vector<T> DecodeRows(const std::filesystem::path& path, Decode decode) {
  std::vector<T> out;
  const std::vector<Json> rows = ReadJsonl(path);
  out.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    try {
      out.push_back(decode(rows[i]));
    } catch (const Error& e) {
      throw Error(e.code(), path.string() + ": record " +
                                std::to_string(i + 1) + ": " + e.what());
    }
  }
  return out;
}

template <typename T, typename Encode>
void EncodeRows(const std::filesystem::path& path, const std::vector<T>& items,
                Encode encode) {
  std::vector<Json> rows;
  rows.reserve(items.size());
  for (const T& item : items) rows.push_back(encode(item));
  WriteJsonl(path, rows);
}

}  // namespace

void WriteCorpus(const std::filesystem::path& path,
                 const std::vector<TaskInstance>& instances) {
  EncodeRows(path, instances, InstanceToJson);
}

std::vector<TaskInstance> ReadCorpus(const std::filesystem::path& path) {
  return DecodeRows<TaskInstance>(path, InstanceFromJson);
}

void WriteTraces(const std::filesystem::path& path,
                 const std::vector<PipelineTrace>& traces) {
  EncodeRows(path, traces, TraceToJson);
}

std::vector<PipelineTrace> ReadTraces(const std::filesystem::path& path) {
  return DecodeRows<PipelineTrace>(path, TraceFromJson);
}

void WriteFaultLabels(const std::filesystem::path& path,
                      const std::vector<FaultLabel>& labels) {
  EncodeRows(path, labels, FaultLabelToJson);
}

std::vector<FaultLabel> ReadFaultLabels(const std::filesystem::path& path) {
  return DecodeRows<FaultLabel>(path, FaultLabelFromJson);
}

}  // namespace graphtool
