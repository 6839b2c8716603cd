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

#include "informed/metrics.h"

#include <algorithm>
#include <cmath>

#include "informed/error.h"

namespace informed {
namespace {

void Warn(Warnings* warnings, std::string message) {
  if (warnings == nullptr) return;
  if (std::find(warnings->begin(), warnings->end(), message) ==
      warnings->end()) {
    warnings->push_back(std::move(message));
  }
}

void RequireSamples(const ConfusionMatrix& cm) {
  if (cm.n() == 0) throw EvalError("empty matrix");
}

// Classes entering macro averages.
std::vector<ClassIndex> ScoredClasses(const ConfusionMatrix& cm,
                                      const MetricOptions& options) {
  const auto gold = cm.gold_counts();
  std::vector<ClassIndex> scored;
  for (ClassIndex c = 0; c < gold.size(); ++c) {
    if (options.include_empty_gold_classes || gold[c] > 0) scored.push_back(c);
  }
  return scored;
}

std::string EmptyGoldClasses(const ConfusionMatrix& cm) {
  const auto gold = cm.gold_counts();
  std::string out;
  for (ClassIndex c = 0; c < gold.size(); ++c) {
    if (gold[c] > 0) continue;
    if (!out.empty()) out += ",";
    out += cm.space().label(c);
  }
  return out;
}

double Mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double BinaryMcc(const ContingencyCells& cells) {
  const double den = static_cast<double>(cells.tp + cells.fp) *
                     static_cast<double>(cells.tp + cells.fn) *
                     static_cast<double>(cells.tn + cells.fp) *
                     static_cast<double>(cells.tn + cells.fn);
  if (den == 0.0) return std::nan("");
  const double num = static_cast<double>(cells.tp) * static_cast<double>(cells.tn) -
                     static_cast<double>(cells.fp) * static_cast<double>(cells.fn);
  return num / std::sqrt(den);
}

}  // namespace

double Accuracy(const ConfusionMatrix& cm) {
  RequireSamples(cm);
  return static_cast<double>(cm.trace()) / static_cast<double>(cm.n());
}

std::vector<double> Recall(const ConfusionMatrix& cm) {
  RequireSamples(cm);
  const auto gold = cm.gold_counts();
  std::vector<double> recall(gold.size(), 0.0);
  for (ClassIndex c = 0; c < gold.size(); ++c) {
    if (gold[c] > 0) {
      recall[c] = static_cast<double>(cm.cell(c, c)) / static_cast<double>(gold[c]);
    }
  }
  return recall;
}

double BalancedAccuracy(const ConfusionMatrix& cm) {
  const auto recall = Recall(cm);
  const auto gold = cm.gold_counts();
  double sum = 0.0;
  std::size_t k = 0;
  for (ClassIndex c = 0; c < gold.size(); ++c) {
    if (gold[c] == 0) continue;
    sum += recall[c];
    ++k;
  }
  return sum / static_cast<double>(k);
}

FMeasures FMeasure(const ConfusionMatrix& cm, const MetricOptions& options,
                   Warnings* warnings) {
  RequireSamples(cm);
  FMeasures out;
  out.per_class.assign(cm.num_classes(), 0.0);
  Count tp_sum = 0;
  Count fp_sum = 0;
  Count fn_sum = 0;
  for (ClassIndex c = 0; c < cm.num_classes(); ++c) {
    const ContingencyCells cells = PerClassContingency(cm, c);
    tp_sum += cells.tp;
    fp_sum += cells.fp;
    fn_sum += cells.fn;
    // tp / (tp + (fp + fn) / 2), kept in integers until the final division.
    const Count den = 2 * cells.tp + cells.fp + cells.fn;
    if (den == 0) {
      Warn(warnings, "f1: class " + cm.space().label(c) +
                         " has no gold or predicted samples; F1 set to 0");
      continue;
    }
    out.per_class[c] =
        static_cast<double>(2 * cells.tp) / static_cast<double>(den);
  }
  const auto scored = ScoredClasses(cm, options);
  if (scored.size() < cm.num_classes()) {
    Warn(warnings, "f1_macro: classes without gold samples excluded: " +
                       EmptyGoldClasses(cm));
  }
  std::vector<double> macro_terms;
  for (ClassIndex c : scored) macro_terms.push_back(out.per_class[c]);
  out.macro = Mean(macro_terms);
  out.micro = static_cast<double>(2 * tp_sum) /
              static_cast<double>(2 * tp_sum + fp_sum + fn_sum);
  return out;
}

double CohenKappa(const ConfusionMatrix& cm, Warnings* warnings) {
  RequireSamples(cm);
  const auto gold = cm.gold_counts();
  const auto pred = cm.pred_counts();
  // Scaled by n^2: observed = n * trace, chance = sum_c pred_c * gold_c.
  Count chance = 0;
  for (ClassIndex c = 0; c < gold.size(); ++c) chance += gold[c] * pred[c];
  const Count n2 = cm.n() * cm.n();
  if (n2 == chance) {
    Warn(warnings, "kappa: degenerate chance agreement; kappa set to 0");
    return 0.0;
  }
  return static_cast<double>(cm.n() * cm.trace() - chance) /
         static_cast<double>(n2 - chance);
}

InformednessResult Informedness(const ConfusionMatrix& cm,
                                const ClassDistribution* priors,
                                Warnings* warnings) {
  RequireSamples(cm);
  const auto gold = cm.gold_counts();
  const std::size_t c_eff = cm.num_gold_classes();
  if (c_eff < 2) throw EvalError("informedness undefined for one class");

  std::vector<double> reference(gold.size(), 0.0);
  for (ClassIndex c = 0; c < gold.size(); ++c) {
    if (priors != nullptr) {
      reference[c] = priors->prob(cm.space().label(c));
      if (gold[c] > 0 && !(reference[c] > 0.0)) {
        throw EvalError("invalid prior: " + cm.space().label(c));
      }
    } else {
      reference[c] = static_cast<double>(gold[c]) / static_cast<double>(cm.n());
    }
  }
  if (priors != nullptr) {
    Warn(warnings,
         "informedness: non-default priors; range [-1/(C_eff-1), 1] not "
         "guaranteed");
  }

  double payoff = 0.0;
  Count correct = 0;
  for (ClassIndex c = 0; c < gold.size(); ++c) {
    const Count tp = cm.cell(c, c);
    if (tp == 0) continue;
    correct += tp;
    if (priors != nullptr) {
      payoff += static_cast<double>(tp) * (1.0 - reference[c]) / reference[c];
    } else {
      // Same payoff with q = gold / n, kept in integers until the division.
      payoff += static_cast<double>(tp * (cm.n() - gold[c])) /
                static_cast<double>(gold[c]);
    }
  }
  payoff -= static_cast<double>(cm.n() - correct);

  InformednessResult out;
  out.overall = payoff / (static_cast<double>(cm.n()) *
                          static_cast<double>(c_eff - 1));
  out.per_class.assign(gold.size(), 0.0);
  for (ClassIndex c = 0; c < gold.size(); ++c) {
    if (gold[c] == 0) continue;
    const ContingencyCells cells = PerClassContingency(cm, c);
    const double recall =
        static_cast<double>(cells.tp) / static_cast<double>(cells.tp + cells.fn);
    const double fallout =
        static_cast<double>(cells.fp) / static_cast<double>(cells.fp + cells.tn);
    out.per_class[c] = recall - fallout;
  }
  return out;
}

MccResult Mcc(const ConfusionMatrix& cm, const MetricOptions& options,
              Warnings* warnings) {
  RequireSamples(cm);
  MccResult out;
  out.per_class.assign(cm.num_classes(), 0.0);
  for (ClassIndex c = 0; c < cm.num_classes(); ++c) {
    const double v = BinaryMcc(PerClassContingency(cm, c));
    if (std::isnan(v)) {
      Warn(warnings, "mcc: zero denominator for class " + cm.space().label(c) +
                         "; MCC set to 0");
      continue;
    }
    out.per_class[c] = v;
  }
  std::vector<double> macro_terms;
  for (ClassIndex c : ScoredClasses(cm, options)) {
    macro_terms.push_back(out.per_class[c]);
  }
  out.macro = Mean(macro_terms);

  const auto gold = cm.gold_counts();
  const auto pred = cm.pred_counts();
  const Count n = cm.n();
  Count pred_gold = 0;
  Count pred_sq = 0;
  Count gold_sq = 0;
  for (ClassIndex c = 0; c < gold.size(); ++c) {
    pred_gold += pred[c] * gold[c];
    pred_sq += pred[c] * pred[c];
    gold_sq += gold[c] * gold[c];
  }
  const double den = static_cast<double>(n * n - pred_sq) *
                     static_cast<double>(n * n - gold_sq);
  if (den == 0.0) {
    Warn(warnings, "mcc: zero denominator (constant side); MCC set to 0");
    out.multiclass = 0.0;
  } else {
    out.multiclass =
        static_cast<double>(n * cm.trace() - pred_gold) / std::sqrt(den);
  }
  return out;
}

NitResult Nit(const ConfusionMatrix& cm, const MetricOptions& options) {
  RequireSamples(cm);
  const auto gold = cm.gold_counts();
  const auto pred = cm.pred_counts();
  const double n = static_cast<double>(cm.n());
  double mi = 0.0;
  for (ClassIndex p = 0; p < cm.num_classes(); ++p) {
    for (ClassIndex g = 0; g < cm.num_classes(); ++g) {
      const Count joint = cm.cell(p, g);
      if (joint == 0) continue;
      const double pj = static_cast<double>(joint) / n;
      mi += pj * std::log2(static_cast<double>(joint) * n /
                           (static_cast<double>(pred[p]) *
                            static_cast<double>(gold[g])));
    }
  }
  NitResult out;
  out.mutual_information = std::max(mi, 0.0);
  const double uniform_entropy =
      std::log2(static_cast<double>(ScoredClasses(cm, options).size()));
  out.nit = std::exp2(out.mutual_information - uniform_entropy);
  return out;
}

const std::vector<std::string>& SuiteMetricNames() {
  static const std::vector<std::string> kNames = {
      "accuracy",     "balanced_accuracy", "f1_macro", "f1_micro",
      "kappa",        "informedness",      "mcc",      "mcc_macro",
      "nit",          "mutual_information"};
  return kNames;
}

const std::vector<std::string>& SuitePerClassNames() {
  static const std::vector<std::string> kNames = {"recall", "f1",
                                                  "informedness", "mcc"};
  return kNames;
}

bool MetricReport::has(std::string_view metric) const {
  return std::any_of(values.begin(), values.end(),
                     [&](const auto& kv) { return kv.first == metric; });
}

double MetricReport::value(std::string_view metric) const {
  for (const auto& [name, v] : values) {
    if (name == metric) return v;
  }
  throw EvalError("missing metric: " + std::string(metric));
}

const std::vector<double>& MetricReport::per_class_values(
    std::string_view metric) const {
  for (const auto& [name, v] : per_class) {
    if (name == metric) return v;
  }
  throw EvalError("missing metric: " + std::string(metric));
}

MetricReport MetricSuite(const ConfusionMatrix& cm, const MetricOptions& options) {
  RequireSamples(cm);
  MetricReport report;
  report.n = cm.n();
  report.c_eff = cm.num_gold_classes();
  report.entropy_gold = Entropy(Prevalence(cm));
  report.labels = cm.space().labels();

  Warnings& warnings = report.warnings;
  const auto fm = FMeasure(cm, options, &warnings);
  const double kappa = CohenKappa(cm, &warnings);
  const auto inf = Informedness(
      cm, options.priors ? &*options.priors : nullptr, &warnings);
  const auto mcc = Mcc(cm, options, &warnings);
  const auto nit = Nit(cm, options);

  report.values = {
      {"accuracy", Accuracy(cm)},
      {"balanced_accuracy", BalancedAccuracy(cm)},
      {"f1_macro", fm.macro},
      {"f1_micro", fm.micro},
      {"kappa", kappa},
      {"informedness", inf.overall},
      {"mcc", mcc.multiclass},
      {"mcc_macro", mcc.macro},
      {"nit", nit.nit},
      {"mutual_information", nit.mutual_information},
  };
  report.per_class = {
      {"recall", Recall(cm)},
      {"f1", fm.per_class},
      {"informedness", inf.per_class},
      {"mcc", mcc.per_class},
  };
  return report;
}

MetricReport DeltaReport(const MetricReport& system,
                         const MetricReport& baseline) {
  if (system.values.size() != baseline.values.size() ||
      system.per_class.size() != baseline.per_class.size() ||
      system.labels != baseline.labels) {
    throw EvalError("incomparable reports");
  }
  MetricReport delta;
  delta.n = system.n;
  delta.c_eff = system.c_eff;
  delta.entropy_gold = system.entropy_gold;
  delta.labels = system.labels;
  for (std::size_t i = 0; i < system.values.size(); ++i) {
    const auto& [name, v] = system.values[i];
    if (baseline.values[i].first != name) throw EvalError("incomparable reports");
    delta.values.emplace_back(name, v - baseline.values[i].second);
  }
  for (std::size_t i = 0; i < system.per_class.size(); ++i) {
    const auto& [name, sys] = system.per_class[i];
    const auto& [base_name, base] = baseline.per_class[i];
    if (base_name != name || base.size() != sys.size()) {
      throw EvalError("incomparable reports");
    }
    std::vector<double> diff(sys.size());
    for (std::size_t k = 0; k < sys.size(); ++k) diff[k] = sys[k] - base[k];
    delta.per_class.emplace_back(name, std::move(diff));
  }
  return delta;
}

double TaskMean(std::span<const MetricReport> reports, std::string_view metric) {
  if (reports.empty()) throw EvalError("no reports to average");
  double sum = 0.0;
  for (const auto& r : reports) sum += r.value(metric);
  return sum / static_cast<double>(reports.size());
}

MetricReport MeanReport(std::span<const MetricReport> reports) {
  if (reports.empty()) throw EvalError("no reports to average");
  MetricReport mean;
  double entropy = 0.0;
  for (const auto& r : reports) {
    mean.n += r.n;
    mean.c_eff = std::max(mean.c_eff, r.c_eff);
    entropy += r.entropy_gold;
  }
  mean.entropy_gold = entropy / static_cast<double>(reports.size());
  for (const auto& [name, unused] : reports.front().values) {
    mean.values.emplace_back(name, TaskMean(reports, name));
  }
  return mean;
}

}  // namespace informed
