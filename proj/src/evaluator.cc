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

#include "graphtool/evaluator.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <unordered_map>

#include "graphtool/errors.h"

namespace graphtool {
namespace {

std::string Folded(std::string_view name) {
  const auto first = name.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return "";
  const auto last = name.find_last_not_of(" \t\r\n");
  std::string out(name.substr(first, last - first + 1));
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

int KindIndex(const TaskKind& kind) {
  const auto& all = AllTaskKinds();
  return static_cast<int>(std::find(all.begin(), all.end(), kind) - all.begin());
}

std::string Percent(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", v);
  return buf;
}

double Pct(int hits, int count) {
  return count == 0 ? 0.0 : 100.0 * hits / count;
}

Json AccToJson(const Accuracies& a) {
  Json hist = Json::object();
  for (Category c : kAllCategories) {
    const auto it = a.histogram.find(c);
    hist[std::string(CategoryName(c))] = it == a.histogram.end() ? 0 : it->second;
  }
  return {{"count", a.count},
          {"answer_accuracy", a.answer},
          {"graph_accuracy", a.graph},
          {"name_accuracy", a.name},
          {"parameter_accuracy", a.param ? Json(*a.param) : Json("n/a")},
          {"categories", std::move(hist)}};
}

Accuracies AccFromJson(const Json& j) {
  Accuracies a;
  try {
    a.count = j.at("count").get<int>();
    a.answer = j.at("answer_accuracy").get<double>();
    a.graph = j.at("graph_accuracy").get<double>();
    a.name = j.at("name_accuracy").get<double>();
    const Json& p = j.at("parameter_accuracy");
    if (p.is_number()) a.param = p.get<double>();
    for (const auto& [name, count] : j.at("categories").items()) {
      const auto c = ParseCategory(name);
      if (!c) throw Error(ErrorCode::kMalformedLine, "unknown category " + name);
      a.histogram[*c] = count.get<int>();
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformedLine, std::string("report: ") + e.what());
  }
  return a;
}

// Accumulates raw match counts for one group of records.
struct Tally {
  int count = 0, answer = 0, graph = 0, name = 0, param = 0, param_count = 0;
  std::map<Category, int> histogram;

  void Add(const EvalRecord& r) {
    ++count;
    answer += r.answer_match;
    graph += r.graph_match;
    name += r.name_match;
    if (r.param_match) {
      ++param_count;
      param += *r.param_match;
    }
    ++histogram[r.category];
  }

  Accuracies ToAccuracies() const {
    Accuracies a;
    a.count = count;
    a.answer = Pct(answer, count);
    a.graph = Pct(graph, count);
    a.name = Pct(name, count);
    if (param_count > 0) a.param = Pct(param, param_count);
    a.histogram = histogram;
    return a;
  }
};

std::string ParamCell(const std::optional<double>& p) {
  return p ? Percent(*p) : "n/a";
}

int HistogramCount(const Accuracies& a, Category c) {
  const auto it = a.histogram.find(c);
  return it == a.histogram.end() ? 0 : it->second;
}

std::vector<std::vector<std::string>> TableRows(const Report& report) {
  std::vector<std::vector<std::string>> rows;
  auto row = [](std::string task, std::string size, const Accuracies& a) {
    std::vector<std::string> r = {std::move(task),   std::move(size),
                                  std::to_string(a.count), Percent(a.answer),
                                  Percent(a.graph),  Percent(a.name),
                                  ParamCell(a.param)};
    for (Category c : kAllCategories) {
      r.push_back(std::to_string(HistogramCount(a, c)));
    }
    return r;
  };
  for (const SliceReport& s : report.slices) {
    rows.push_back(row(TaskKindName(s.kind), std::string(SizeClassName(s.size_class)), s.acc));
  }
  for (const OverallReport& o : report.overall) {
    rows.push_back(row("Overall", std::string(SizeClassName(o.size_class)), o.acc));
  }
  return rows;
}

}  // namespace

std::string_view CategoryName(Category category) {
  switch (category) {
    case Category::kCorrect: return "Correct";
    case Category::kSyntaxError: return "SyntaxError";
    case Category::kGraphMismatch: return "GraphMismatch";
    case Category::kNameMismatch: return "NameMismatch";
    case Category::kParaMismatch: return "ParaMismatch";
  }
  return "Correct";
}

std::optional<Category> ParseCategory(std::string_view name) {
  for (Category c : kAllCategories) {
    if (CategoryName(c) == name) return c;
  }
  return std::nullopt;
}

Json RecordToJson(const EvalRecord& r) {
  Json failures = Json::array();
  for (Category c : r.failures) failures.push_back(CategoryName(c));
  return {{"instance_id", r.instance_id},
          {"kind", TaskKindName(r.kind)},
          {"size", SizeClassName(r.size_class)},
          {"graph_match", r.graph_match},
          {"name_match", r.name_match},
          {"param_match", r.param_match ? Json(*r.param_match) : Json(nullptr)},
          {"answer_match", r.answer_match},
          {"category", CategoryName(r.category)},
          {"failures", std::move(failures)}};
}

EvalRecord RecordFromJson(const Json& j) {
  EvalRecord r;
  try {
    r.instance_id = j.at("instance_id").get<std::string>();
    const auto kind = ParseTaskKind(j.at("kind").get<std::string>());
    const auto size = ParseSizeClass(j.at("size").get<std::string>());
    const auto category = ParseCategory(j.at("category").get<std::string>());
    if (!kind || !size || !category) {
      throw Error(ErrorCode::kMalformedLine, "bad record enums");
    }
    r.kind = *kind;
    r.size_class = *size;
    r.category = *category;
    r.graph_match = j.at("graph_match").get<bool>();
    r.name_match = j.at("name_match").get<bool>();
    if (!j.at("param_match").is_null()) r.param_match = j.at("param_match").get<bool>();
    r.answer_match = j.at("answer_match").get<bool>();
    for (const Json& f : j.at("failures")) {
      const auto c = ParseCategory(f.get<std::string>());
      if (!c) throw Error(ErrorCode::kMalformedLine, "bad failure category");
      r.failures.push_back(*c);
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformedLine, std::string("record: ") + e.what());
  }
  return r;
}

EvalRecord ScoreTrace(const PipelineTrace& trace, const TaskInstance& instance) {
  EvalRecord r;
  r.instance_id = instance.id;
  r.kind = instance.kind;
  r.size_class = instance.size_class;

  const StageRecord* g = trace.Stage(StageKind::kGraphExtraction);
  const StageRecord* n = trace.Stage(StageKind::kToolNameIdentification);
  const StageRecord* p = trace.Stage(StageKind::kToolParameterExtraction);
  const bool parametric = !instance.basic_analysis();

  const bool g_syntax = !g || IsParseFailure(g->parsed);
  r.graph_match = !g_syntax && trace.graph &&
                  GraphsEqual(*trace.graph, instance.gold_graph);

  const auto* name = n ? std::get_if<ExtractedName>(&n->parsed) : nullptr;
  const bool unknown_tool =
      trace.tool_error && trace.tool_error->code == ErrorCode::kUnknownTool;
  const bool n_syntax = !name || unknown_tool;
  r.name_match = name && Folded(name->name) == ToolNameString(instance.gold_tool);

  bool p_syntax = false;
  if (parametric) {
    const auto* params = p ? std::get_if<ExtractedParams>(&p->parsed) : nullptr;
    p_syntax = !params;
    r.param_match = params && params->values == instance.gold_params;
  }
  r.answer_match = trace.tool_result && *trace.tool_result == instance.gold_answer;

  const bool dispatched = !g_syntax && trace.graph && !n_syntax && !p_syntax;
  const bool dispatch_error = dispatched && trace.tool_error.has_value();

  auto fail = [&r](Category c) {
    if (std::find(r.failures.begin(), r.failures.end(), c) == r.failures.end()) {
      r.failures.push_back(c);
    }
  };
  if (g_syntax) fail(Category::kSyntaxError);
  else if (!r.graph_match) fail(Category::kGraphMismatch);
  if (n_syntax) fail(Category::kSyntaxError);
  else if (!r.name_match) fail(Category::kNameMismatch);
  if (parametric) {
    if (p_syntax) fail(Category::kSyntaxError);
    else if (!*r.param_match) fail(Category::kParaMismatch);
  }
  if (dispatch_error) fail(Category::kSyntaxError);
  if (r.failures.empty() && !r.answer_match) fail(Category::kGraphMismatch);

  r.category = r.failures.empty() ? Category::kCorrect : r.failures.front();
  return r;
}

Json Report::ToJson() const {
  Json slice_rows = Json::array();
  for (const SliceReport& s : slices) {
    Json row = {{"kind", TaskKindName(s.kind)},
                {"size", SizeClassName(s.size_class)}};
    row.update(AccToJson(s.acc));
    slice_rows.push_back(std::move(row));
  }
  Json overall_rows = Json::array();
  for (const OverallReport& o : overall) {
    Json row = {{"size", SizeClassName(o.size_class)}, {"kinds", o.kinds}};
    row.update(AccToJson(o.acc));
    overall_rows.push_back(std::move(row));
  }
  Json multi = Json::object();
  for (const auto& [key, count] : multi_fault) multi[key] = count;
  return {{"slices", std::move(slice_rows)},
          {"overall", std::move(overall_rows)},
          {"multi_fault", std::move(multi)}};
}

Report Report::FromJson(const Json& j) {
  Report report;
  try {
    for (const Json& row : j.at("slices")) {
      SliceReport s;
      const auto kind = ParseTaskKind(row.at("kind").get<std::string>());
      const auto size = ParseSizeClass(row.at("size").get<std::string>());
      if (!kind || !size) throw Error(ErrorCode::kMalformedLine, "bad slice");
      s.kind = *kind;
      s.size_class = *size;
      s.acc = AccFromJson(row);
      report.slices.push_back(std::move(s));
    }
    for (const Json& row : j.at("overall")) {
      OverallReport o;
      const auto size = ParseSizeClass(row.at("size").get<std::string>());
      if (!size) throw Error(ErrorCode::kMalformedLine, "bad overall row");
      o.size_class = *size;
      o.kinds = row.at("kinds").get<int>();
      o.acc = AccFromJson(row);
      report.overall.push_back(std::move(o));
    }
    for (const auto& [key, count] : j.at("multi_fault").items()) {
      report.multi_fault[key] = count.get<int>();
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kMalformedLine, std::string("report: ") + e.what());
  }
  return report;
}

Report Aggregate(const std::vector<EvalRecord>& records,
                 const std::vector<TaskInstance>& corpus) {
  if (records.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no evaluation records");
  }
  std::unordered_map<std::string_view, const TaskInstance*> by_id;
  for (const TaskInstance& inst : corpus) by_id.emplace(inst.id, &inst);

  std::map<std::pair<SizeClass, int>, Tally> tallies;
  Report report;
  for (const EvalRecord& r : records) {
    if (!by_id.count(r.instance_id)) {
      throw Error(ErrorCode::kOrphanTrace,
                  "record " + r.instance_id + " has no corpus instance");
    }
    tallies[{r.size_class, KindIndex(r.kind)}].Add(r);
    if (r.failures.size() > 1) {
      std::string key;
      for (Category c : r.failures) {
        if (!key.empty()) key += '+';
        key += CategoryName(c);
      }
      ++report.multi_fault[key];
    }
  }

  std::map<SizeClass, std::vector<const Accuracies*>> by_size;
  for (const auto& [key, tally] : tallies) {
    report.slices.push_back(
        {AllTaskKinds()[key.second], key.first, tally.ToAccuracies()});
  }
  for (const SliceReport& s : report.slices) by_size[s.size_class].push_back(&s.acc);

  for (const auto& [size, accs] : by_size) {
    OverallReport o;
    o.size_class = size;
    o.kinds = static_cast<int>(accs.size());
    double param_sum = 0.0;
    int param_kinds = 0;
    for (const Accuracies* a : accs) {
      o.acc.count += a->count;
      o.acc.answer += a->answer / accs.size();
      o.acc.graph += a->graph / accs.size();
      o.acc.name += a->name / accs.size();
      if (a->param) {
        param_sum += *a->param;
        ++param_kinds;
      }
      for (const auto& [c, count] : a->histogram) o.acc.histogram[c] += count;
    }
    if (param_kinds > 0) o.acc.param = param_sum / param_kinds;
    report.overall.push_back(std::move(o));
  }
  return report;
}

std::string RenderReport(const Report& report, std::string_view format) {
  if (format != "txt" && format != "md") {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown report format '" + std::string(format) + "'");
  }
  std::vector<std::string> header = {"Task", "Size", "N", "Answer", "Graph",
                                     "Name", "Param"};
  for (Category c : kAllCategories) header.emplace_back(CategoryName(c));
  const auto rows = TableRows(report);

  std::string out;
  if (format == "md") {
    auto line = [&out](const std::vector<std::string>& cells) {
      out += '|';
      for (const std::string& c : cells) out += " " + c + " |";
      out += '\n';
    };
    line(header);
    out += '|';
    for (std::size_t i = 0; i < header.size(); ++i) out += i < 2 ? " --- |" : " ---: |";
    out += '\n';
    for (const auto& row : rows) line(row);
  } else {
    std::vector<std::size_t> width(header.size());
    for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        width[i] = std::max(width[i], row[i].size());
      }
    }
    auto line = [&](const std::vector<std::string>& cells) {
      std::string text;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        const std::string pad(width[i] - cells[i].size(), ' ');
        if (i > 0) text += "  ";
        text += i < 2 ? cells[i] + pad : pad + cells[i];
      }
      while (!text.empty() && text.back() == ' ') text.pop_back();
      out += text + '\n';
    };
    line(header);
    std::size_t total = 0;
    for (std::size_t w : width) total += w;
    out += std::string(total + 2 * (width.size() - 1), '-') + '\n';
    for (const auto& row : rows) line(row);
  }

  if (!report.multi_fault.empty()) {
    out += format == "md" ? "\n**Records failing several checks**\n\n"
                          : "\nRecords failing several checks:\n";
    for (const auto& [key, count] : report.multi_fault) {
      out += (format == "md" ? "- " : "  ") + key + ": " + std::to_string(count) + '\n';
    }
  }
  return out;
}

Category ExpectedCategory(FaultMode mode) {
  switch (mode) {
    case FaultMode::kDropGraphEdges: return Category::kGraphMismatch;
    case FaultMode::kWrongToolName: return Category::kNameMismatch;
    case FaultMode::kSwapParameters: return Category::kParaMismatch;
    case FaultMode::kEmitGarbage: return Category::kSyntaxError;
    case FaultMode::kNone: break;
  }
  return Category::kCorrect;
}

Json LabelAgreement::ToJson() const {
  Json modes = Json::object();
  for (const auto& [mode, counts] : per_mode) {
    modes[std::string(FaultModeName(mode))] = {{"agreed", counts.first},
                                              {"total", counts.second}};
  }
  return {{"single_fault", single_fault},
          {"agreed", agreed},
          {"per_mode", std::move(modes)},
          {"disagreements", disagreements}};
}

LabelAgreement CompareWithLabels(const std::vector<EvalRecord>& records,
                                 const std::vector<FaultLabel>& labels) {
  std::unordered_map<std::string, std::vector<FaultMode>> by_id;
  for (const FaultLabel& l : labels) by_id[l.instance_id].push_back(l.mode);
  LabelAgreement out;
  for (const EvalRecord& r : records) {
    const auto it = by_id.find(r.instance_id);
    if (it == by_id.end() || it->second.size() != 1) continue;
    const FaultMode mode = it->second.front();
    const bool ok = r.category == ExpectedCategory(mode);
    ++out.single_fault;
    auto& [agreed, total] = out.per_mode[mode];
    ++total;
    if (ok) {
      ++agreed;
      ++out.agreed;
    } else {
      out.disagreements.push_back(r.instance_id);
    }
  }
  return out;
}

}  // namespace graphtool
