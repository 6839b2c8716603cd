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

// Scalar classification metrics over a confusion matrix.
//
// All values are on the unit scale. Functions are pure; degenerate cases
// with a conventional value (empty one-vs-rest F1, kappa with certain chance
// agreement, MCC with a constant side) return 0 and append a warning of the
// form "<metric>: <message>" to `warnings` when it is non-null. Cases with no
// convention throw EvalError.

#ifndef INFORMED_METRICS_H_
#define INFORMED_METRICS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "informed/confusion_matrix.h"
#include "informed/distribution.h"

namespace informed {

using Warnings = std::vector<std::string>;

struct MetricOptions {
  // Reference class distribution for informedness payoffs. When absent the
  // test-set prevalence is used.
  std::optional<ClassDistribution> priors;
  // Keep classes without gold samples in F1-macro, MCC-macro and the NIT
  // uniform entropy. Set when the label space was given explicitly.
  bool include_empty_gold_classes = false;
};

struct FMeasures {
  std::vector<double> per_class;
  double macro = 0.0;
  double micro = 0.0;
};

struct InformednessResult {
  double overall = 0.0;
  // Recall minus fallout; 0 for classes without gold samples.
  std::vector<double> per_class;
};

struct MccResult {
  // R_K statistic over the full matrix.
  double multiclass = 0.0;
  double macro = 0.0;
  // One-vs-rest binary MCC.
  std::vector<double> per_class;
};

struct NitResult {
  double nit = 0.0;
  double mutual_information = 0.0;  // bits
};

double Accuracy(const ConfusionMatrix& cm);

// Per-class recall; 0 for classes without gold samples.
std::vector<double> Recall(const ConfusionMatrix& cm);

// Mean recall over classes with at least one gold sample.
double BalancedAccuracy(const ConfusionMatrix& cm);

FMeasures FMeasure(const ConfusionMatrix& cm, const MetricOptions& options = {},
                   Warnings* warnings = nullptr);

double CohenKappa(const ConfusionMatrix& cm, Warnings* warnings = nullptr);

// Bookmaker informedness. Each correct prediction of class c pays
// (1 - q_c) / q_c, each wrong prediction pays -1, and the total is divided by
// n * (C_eff - 1). With q = prevalence this equals
// (sum_c recall_c - 1) / (C_eff - 1), and Youden's J for two classes.
InformednessResult Informedness(const ConfusionMatrix& cm,
                                const ClassDistribution* priors = nullptr,
                                Warnings* warnings = nullptr);

MccResult Mcc(const ConfusionMatrix& cm, const MetricOptions& options = {},
              Warnings* warnings = nullptr);

// Normalized information transfer 2^(MI - log2 C), MI in bits over the
// empirical joint distribution.
NitResult Nit(const ConfusionMatrix& cm, const MetricOptions& options = {});

// Named scalars in insertion order.
using NamedValues = std::vector<std::pair<std::string, double>>;
using NamedVectors = std::vector<std::pair<std::string, std::vector<double>>>;

struct MetricReport {
  Count n = 0;
  std::size_t c_eff = 0;
  double entropy_gold = 0.0;
  std::vector<std::string> labels;
  NamedValues values;
  NamedVectors per_class;
  Warnings warnings;

  bool has(std::string_view metric) const;
  // Throws EvalError("missing metric: <name>").
  double value(std::string_view metric) const;
  const std::vector<double>& per_class_values(std::string_view metric) const;
};

// Metric names in report order.
const std::vector<std::string>& SuiteMetricNames();
const std::vector<std::string>& SuitePerClassNames();

MetricReport MetricSuite(const ConfusionMatrix& cm,
                         const MetricOptions& options = {});

// Per-metric system - baseline. Throws EvalError("incomparable reports") when
// metric sets or label lists differ.
MetricReport DeltaReport(const MetricReport& system,
                         const MetricReport& baseline);

// Arithmetic mean of one metric across reports.
double TaskMean(std::span<const MetricReport> reports, std::string_view metric);

// Uniform mean of every metric across reports; per-class vectors are
// dropped and n is the total sample count.
MetricReport MeanReport(std::span<const MetricReport> reports);

}  // namespace informed

#endif  // INFORMED_METRICS_H_
