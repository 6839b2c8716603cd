/*
 * Copyright 2026 The Informed Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Loading gold/predicted labels, score discretization, and the baseline
// predictors used as comparison rows.
//
// Prediction files:
//   CSV / TSV  header row with `gold`, `pred` and optional `group` columns.
//   JSONL      one object per line with the same keys.
// Distribution files:
//   CSV        `label,count` (or `label,probability`) rows, optional header.
//   JSON       object label -> number.

#ifndef INFORMED_INGESTION_H_
#define INFORMED_INGESTION_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "informed/distribution.h"
#include "informed/label_space.h"
#include "informed/metrics.h"

namespace informed {

enum class InputFormat { kCsv, kTsv, kJsonl };

// "csv", "tsv" or "jsonl". Throws EvalError otherwise.
InputFormat ParseInputFormat(std::string_view name);
// Guess from a file extension; CSV when unknown.
InputFormat InferInputFormat(std::string_view path);

enum class LabelPolicy {
  // Label space is the union of gold and predicted labels.
  kLabelUnion,
  // Label space is supplied by the caller; any other label is an error.
  kStrict,
};

struct Schema {
  std::string gold = "gold";
  std::string pred = "pred";
  std::string group = "group";
};

struct ParseOptions {
  InputFormat format = InputFormat::kCsv;
  LabelPolicy policy = LabelPolicy::kLabelUnion;
  // Required under kStrict; fixes class order under kLabelUnion.
  std::optional<LabelSpace> labels;
  Schema schema;
  // Round numeric labels to integer classes in [lo, hi].
  std::optional<std::pair<double, double>> discretize;
};

struct PredictionRecord {
  std::string gold;
  std::string pred;
  std::optional<std::string> group;
  std::size_t line = 0;
};

// Samples partitioned by sub-task key. Records without a group key fall
// under the empty key.
class GroupedDataset {
 public:
  GroupedDataset(std::vector<PredictionRecord> records, LabelSpace space,
                 bool explicit_space);

  const std::vector<PredictionRecord>& records() const { return records_; }
  const LabelSpace& space() const { return space_; }
  // True when the label space was supplied rather than inferred.
  bool explicit_space() const { return explicit_space_; }
  std::size_t size() const { return records_.size(); }

  // Group keys in first-seen order.
  const std::vector<std::string>& group_keys() const { return group_keys_; }
  bool has_groups() const;
  std::size_t group_size(std::string_view key) const;

  ClassificationSet Overall() const;
  // With `shared_space` false an inferred dataset uses the labels seen in
  // that group only; an explicit space is always shared.
  ClassificationSet Group(std::string_view key, bool shared_space) const;

 private:
  std::vector<PredictionRecord> records_;
  LabelSpace space_;
  bool explicit_space_ = false;
  std::vector<std::string> group_keys_;
};

// Throws EvalError with a line number on malformed rows, unknown labels
// under kStrict, and "schema error: ..." on missing columns.
GroupedDataset ParsePredictions(std::istream& in, const ParseOptions& options,
                                Warnings* warnings = nullptr);

struct GoldRecord {
  std::string gold;
  std::optional<std::string> group;
};

// Reads only the gold (and group) columns of a prediction-format file.
std::vector<GoldRecord> ReadGoldLabels(std::istream& in, InputFormat format,
                                       const Schema& schema = {});

// Rounds each value to the nearest integer, halves away from zero, then
// clamps to the integers in [lo, hi]. Values beyond half a unit outside the
// range warn; NaN throws.
std::vector<std::string> DiscretizeScores(std::span<const double> values,
                                          double lo, double hi,
                                          Warnings* warnings = nullptr);

enum class BaselineMode { kMostCommon, kPrevalenceSample };

// "most-common" or "prevalence-sample".
BaselineMode ParseBaselineMode(std::string_view name);

// Predictions for `gold` from a label-blind predictor. kMostCommon predicts
// the argmax of `train` (ties to the earlier label); kPrevalenceSample draws
// i.i.d. from `train` with the given seed. The label space is the gold labels
// in first-seen order followed by the remaining train labels.
ClassificationSet MakeBaseline(BaselineMode mode, const ClassDistribution& train,
                               const std::vector<std::string>& gold,
                               std::uint64_t seed);

// Label -> count or label -> probability. Values summing to 1 within 1e-6
// are probabilities; otherwise whole-number values are counts.
ClassDistribution LoadDistribution(std::istream& in);

}  // namespace informed

#endif  // INFORMED_INGESTION_H_
