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

#ifndef GRAPHTOOL_EVALUATOR_H_
#define GRAPHTOOL_EVALUATOR_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "graphtool/backend.h"
#include "graphtool/pipeline.h"
#include "graphtool/serialization.h"
#include "graphtool/tasks.h"

namespace graphtool {

enum class Category {
  kCorrect,
  kSyntaxError,
  kGraphMismatch,
  kNameMismatch,
  kParaMismatch,
};

inline constexpr std::array<Category, 5> kAllCategories = {
    Category::kCorrect, Category::kSyntaxError, Category::kGraphMismatch,
    Category::kNameMismatch, Category::kParaMismatch};

std::string_view CategoryName(Category category);
std::optional<Category> ParseCategory(std::string_view name);

struct EvalRecord {
  std::string instance_id;
  TaskKind kind;
  SizeClass size_class = SizeClass::kWithinLimit;
  bool graph_match = false;
  bool name_match = false;
  std::optional<bool> param_match;  // absent for basic-analysis kinds
  bool answer_match = false;
  Category category = Category::kCorrect;
  // Every failing check, for traces with more than one defect.
  std::vector<Category> failures;
};

Json RecordToJson(const EvalRecord& record);
EvalRecord RecordFromJson(const Json& j);

// Checks run in stage order: a parse failure in a stage is a syntax error,
// then that stage's label is compared, then the next stage is examined.
// The first failing check names the category, so a defect is attributed to
// the stage that introduced it rather than to the downstream stages it
// breaks. Dispatch errors with all labels correct are syntax errors.
EvalRecord ScoreTrace(const PipelineTrace& trace, const TaskInstance& instance);

struct Accuracies {
  int count = 0;
  double answer = 0.0;
  double graph = 0.0;
  double name = 0.0;
  std::optional<double> param;  // percentages
  std::map<Category, int> histogram;
};

struct SliceReport {
  TaskKind kind;
  SizeClass size_class = SizeClass::kWithinLimit;
  Accuracies acc;
};

// Overall rows are unweighted means of the per-kind percentages of one size
// class; parameter accuracy averages only the parametric kinds.
struct OverallReport {
  SizeClass size_class = SizeClass::kWithinLimit;
  int kinds = 0;
  Accuracies acc;
};

struct Report {
  std::vector<SliceReport> slices;  // by size class, then kind order
  std::vector<OverallReport> overall;
  // Records failing more than one check, keyed by "A+B" in check order.
  std::map<std::string, int> multi_fault;

  Json ToJson() const;
  static Report FromJson(const Json& j);
};

// Throws Error(kEmptyInput) for no records, Error(kOrphanTrace) when a
// record has no corpus instance.
Report Aggregate(const std::vector<EvalRecord>& records,
                 const std::vector<TaskInstance>& corpus);

// "txt" or "md"; percentages with one decimal. Throws
// Error(kInvalidArgument) for other formats.
std::string RenderReport(const Report& report, std::string_view format);

// The category a single injected fault must produce.
Category ExpectedCategory(FaultMode mode);

struct LabelAgreement {
  int single_fault = 0;  // records whose instance carries exactly one label
  int agreed = 0;
  std::map<FaultMode, std::pair<int, int>> per_mode;  // (agreed, total)
  std::vector<std::string> disagreements;  // instance ids

  Json ToJson() const;
};

LabelAgreement CompareWithLabels(const std::vector<EvalRecord>& records,
                                 const std::vector<FaultLabel>& labels);

}  // namespace graphtool

#endif  // GRAPHTOOL_EVALUATOR_H_
