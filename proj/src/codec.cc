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

#include "graphtool/codec.h"

#include <algorithm>
#include <charconv>
#include <climits>
#include <regex>
#include <set>
#include <sstream>
#include <utility>

#include "graphtool/errors.h"
#include "graphtool/io.h"

namespace graphtool {
namespace {

// Ids above this are treated as garbage rather than allocated for.
constexpr std::int64_t kMaxExtractedNodeId = 1'000'000;

const std::regex& CompiledEdgePattern(WeightKind kind) {
  static const std::regex unweighted(std::string(patterns::kUnweightedEdge));
  static const std::regex weighted(std::string(patterns::kWeightedEdge));
  static const std::regex capacity(std::string(patterns::kCapacityEdge));
  switch (kind) {
    case WeightKind::kWeight: return weighted;
    case WeightKind::kCapacity: return capacity;
    case WeightKind::kNone: break;
  }
  return unweighted;
}

std::optional<std::int64_t> ToInt(std::string_view digits,
                                  std::int64_t max = INT_MAX) {
  std::int64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size() ||
      value > max) {
    return std::nullopt;
  }
  return value;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

using SvMatch = std::match_results<std::string_view::const_iterator>;

std::optional<std::vector<std::int64_t>> CaptureInts(const SvMatch& m) {
  std::vector<std::int64_t> values;
  for (std::size_t i = 1; i < m.size(); ++i) {
    const auto v = ToInt(std::string_view(&*m[i].first, m[i].length()),
                         std::numeric_limits<std::int64_t>::max());
    if (!v) return std::nullopt;
    values.push_back(*v);
  }
  return values;
}

}  // namespace

namespace patterns {

std::string NamedParameters(std::span<const std::string> names) {
  std::string out = "(?:";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += R"([,\s]*)";
    out += names[i] + R"(\s*=\s*(\d+))";
  }
  return out + ")";
}

std::string PositionalParameters(int arity) {
  std::string out = "(?:G";
  for (int i = 0; i < arity; ++i) out += R"(,\s*(\d+))";
  return out + R"((?!\d|\s*,\s*\d))" + ")";
}

std::string_view EdgePattern(WeightKind kind) {
  switch (kind) {
    case WeightKind::kWeight: return kWeightedEdge;
    case WeightKind::kCapacity: return kCapacityEdge;
    case WeightKind::kNone: break;
  }
  return kUnweightedEdge;
}

}  // namespace patterns

std::string RenderEdgeList(const Graph& g) {
  std::string out;
  out.reserve(g.edge_count() * (g.weighted() ? 26 : 10));
  const std::string label =
      g.weight_kind() == WeightKind::kCapacity ? "capacity" : "weight";
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (i) out += ", ";
    out += '(';
    out += std::to_string(e.u);
    out += ", ";
    out += std::to_string(e.v);
    if (e.weight) {
      out += ", {'" + label + "': " + std::to_string(*e.weight) + "}";
    }
    out += ')';
  }
  return out;
}

std::string RenderNamedParameters(std::span<const std::string> names,
                                  std::span<const std::int64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < names.size() && i < values.size(); ++i) {
    if (i) out += ", ";
    out += names[i] + "=" + std::to_string(values[i]);
  }
  return out;
}

ExtractionResult ExtractGraph(std::string_view text, WeightKind kind,
                              bool directed) {
  const std::regex& re = CompiledEdgePattern(kind);
  std::vector<Edge> edges;
  for (std::regex_iterator<std::string_view::const_iterator> it(
           text.begin(), text.end(), re),
       end;
       it != end; ++it) {
    const auto& m = *it;
    const auto u = ToInt(std::string_view(&*m[1].first, m[1].length()),
                         kMaxExtractedNodeId);
    const auto v = ToInt(std::string_view(&*m[2].first, m[2].length()),
                         kMaxExtractedNodeId);
    if (!u || !v) return ParseFailure{"node id out of range in " + m.str()};
    Edge e{static_cast<NodeId>(*u), static_cast<NodeId>(*v), std::nullopt};
    if (kind != WeightKind::kNone) {
      const auto w = ToInt(std::string_view(&*m[3].first, m[3].length()));
      if (!w) return ParseFailure{"weight out of range in " + m.str()};
      e.weight = static_cast<int>(*w);
    }
    edges.push_back(e);
  }
  if (edges.empty()) return ParseFailure{"no edge matches"};
  try {
    return ExtractedGraph{Graph::FromEdgeList(directed, std::move(edges), kind)};
  } catch (const Error& e) {
    return ParseFailure{std::string("invalid graph: ") + e.what()};
  }
}

ExtractionResult ExtractToolName(std::string_view text) {
  static const std::regex re(std::string(patterns::kToolName));
  SvMatch m;
  if (!std::regex_search(text.begin(), text.end(), m, re)) {
    return ParseFailure{"no API_name match"};
  }
  return ExtractedName{
      std::string(Trim(std::string_view(&*m[1].first, m[1].length())))};
}

ExtractionResult ExtractParameters(std::string_view text,
                                   const ToolSpec& spec) {
  const std::vector<std::string> names = spec.QueryParameterNames();
  if (names.empty()) return ExtractedParams{};
  const int arity = static_cast<int>(names.size());

  SvMatch m;
  const std::regex named(patterns::NamedParameters(names));
  if (std::regex_search(text.begin(), text.end(), m, named)) {
    if (auto values = CaptureInts(m)) return ExtractedParams{*values};
    return ParseFailure{"parameter value out of range"};
  }

  std::vector<std::int64_t> values;
  for (const std::string& name : names) {
    const std::regex single(R"(\b)" + name + R"(\s*=\s*(\d+))");
    if (!std::regex_search(text.begin(), text.end(), m, single)) break;
    const auto v = CaptureInts(m);
    if (!v) return ParseFailure{"parameter value out of range"};
    values.push_back(v->front());
  }
  if (static_cast<int>(values.size()) == arity) return ExtractedParams{values};
  const bool partial_named = !values.empty();

  const std::regex positional(patterns::PositionalParameters(arity));
  if (std::regex_search(text.begin(), text.end(), m, positional)) {
    if (auto v = CaptureInts(m)) return ExtractedParams{*v};
    return ParseFailure{"parameter value out of range"};
  }
  static const std::regex any_positional(R"(G(?:,\s*\d+)+)");
  if (partial_named ||
      std::regex_search(text.begin(), text.end(), m, any_positional)) {
    return ParseFailure{"arity: expected " + std::to_string(arity) +
                        " parameter(s) for " + spec.name};
  }
  return ParseFailure{"no parameter match for " + spec.name};
}

ExtractionResult ExtractFilePath(std::string_view text) {
  static const std::regex re(std::string(patterns::kFilePath));
  SvMatch m;
  if (!std::regex_search(text.begin(), text.end(), m, re)) {
    return ParseFailure{"no file path match"};
  }
  return ExtractedPath{m[1].str()};
}

std::string FormatElGraph(const Graph& g) {
  std::string out = g.directed() ? "directed\n" : "undirected\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u);
    out += ", ";
    out += std::to_string(e.v);
    if (e.weight) {
      out += ", ";
      out += std::to_string(*e.weight);
    }
    out += '\n';
  }
  return out;
}

Graph ParseElGraph(std::string_view contents, WeightKind weighted_as) {
  if (weighted_as == WeightKind::kNone) weighted_as = WeightKind::kWeight;
  std::istringstream in{std::string(contents)};
  std::string line;
  int line_no = 0;
  auto malformed = [&](const std::string& why) {
    return Error(ErrorCode::kMalformedLine,
                 "line " + std::to_string(line_no) + ": " + why);
  };

  ++line_no;
  if (!std::getline(in, line)) throw malformed("missing header line");
  const std::string_view header = Trim(line);
  if (header != "directed" && header != "undirected") {
    throw malformed("expected 'directed' or 'undirected' header");
  }
  const bool directed = header == "directed";

  std::vector<Edge> edges;
  std::set<std::pair<NodeId, NodeId>> seen;
  int fields_per_line = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = Trim(line);
    if (body.empty()) continue;
    std::vector<std::int64_t> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      const auto field = Trim(body.substr(
          start, comma == std::string_view::npos ? comma : comma - start));
      const auto value = ToInt(field);
      if (!value) throw malformed("expected a non-negative integer");
      fields.push_back(*value);
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 2 && fields.size() != 3) {
      throw malformed("expected 'u, v' or 'u, v, w'");
    }
    if (fields_per_line == 0) fields_per_line = static_cast<int>(fields.size());
    if (static_cast<int>(fields.size()) != fields_per_line) {
      throw malformed("mixes weighted and unweighted edges");
    }
    if (fields[0] == fields[1]) throw malformed("self-loop");
    if (fields[0] > kMaxExtractedNodeId || fields[1] > kMaxExtractedNodeId) {
      throw malformed("node id out of range");
    }
    Edge e{static_cast<NodeId>(fields[0]), static_cast<NodeId>(fields[1]),
           std::nullopt};
    if (fields.size() == 3) {
      if (fields[2] < 1) throw malformed("weight must be positive");
      e.weight = static_cast<int>(fields[2]);
    }
    const auto key = directed || e.u < e.v ? std::pair(e.u, e.v)
                                           : std::pair(e.v, e.u);
    if (!seen.insert(key).second) throw malformed("duplicate edge");
    edges.push_back(e);
  }
  const WeightKind kind = fields_per_line == 3 ? weighted_as : WeightKind::kNone;
  return Graph::FromEdgeList(directed, std::move(edges), kind);
}

Graph ReadElGraphFile(const std::filesystem::path& path,
                      WeightKind weighted_as) {
  return ParseElGraph(ReadFile(path), weighted_as);
}

void WriteElGraphFile(const Graph& g, const std::filesystem::path& path) {
  WriteFileAtomic(path, FormatElGraph(g));
}

}  // namespace graphtool
