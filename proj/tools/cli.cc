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

#include "cli.h"

#include <charconv>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "CLI11.hpp"
#include "informed/confusion_matrix.h"
#include "informed/error.h"
#include "informed/ingestion.h"
#include "informed/metrics.h"
#include "informed/report.h"
#include "informed/simulation.h"

namespace informed::cli {
namespace {

// Bad flag values detected after CLI11 parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> SplitList(const std::string& text, char delim) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, delim)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    items.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return items;
}

double ParseDouble(const std::string& text, const std::string& flag) {
  double v = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (text.empty() || ec != std::errc() || ptr != end) {
    throw UsageError(flag + ": '" + text + "' is not a number");
  }
  return v;
}

std::vector<double> ParseDoubles(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  for (const auto& item : SplitList(text, ',')) out.push_back(ParseDouble(item, flag));
  if (out.empty()) throw UsageError(flag + ": empty list");
  return out;
}

ClassDistribution ParsePrevalence(const std::string& text, const std::string& flag) {
  const auto probs = ParseDoubles(text, flag);
  try {
    return ClassDistribution(IndexedLabelSpace(probs.size()), probs);
  } catch (const EvalError& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  return in;
}

// Flags shared by evaluate and compare.
struct EvalFlags {
  std::string input_format;
  std::string policy = "union";
  std::string labels;
  std::string priors;
  std::string output = "table";
  std::string discretize;
  std::string gold_column = "gold";
  std::string pred_column = "pred";
  std::string group_column = "group";
  bool percent = false;
  bool group = false;
  bool shared_space = false;
};

void AddEvalFlags(CLI::App* cmd, EvalFlags& f) {
  cmd->add_option("--input-format", f.input_format,
                  "csv, tsv or jsonl (default: from extension)")
      ->check(CLI::IsMember({"csv", "tsv", "jsonl"}));
  cmd->add_option("--policy", f.policy, "Label policy")
      ->check(CLI::IsMember({"union", "strict"}));
  cmd->add_option("--labels", f.labels, "Comma-separated label space");
  cmd->add_option("--priors", f.priors,
                  "Train class distribution for informedness")
      ->check(CLI::ExistingFile);
  cmd->add_option("--format", f.output, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  cmd->add_option("--discretize", f.discretize,
                  "LO,HI: round numeric labels to integer classes");
  cmd->add_option("--gold-column", f.gold_column, "Gold label column");
  cmd->add_option("--pred-column", f.pred_column, "Predicted label column");
  cmd->add_option("--group-column", f.group_column, "Sub-task column");
  cmd->add_flag("--percent", f.percent, "Scale metrics by 100");
  cmd->add_flag("--group", f.group, "Also report each sub-task group");
  cmd->add_flag("--shared-space", f.shared_space,
                "Evaluate groups over the global label space");
}

ParseOptions MakeParseOptions(const EvalFlags& f, const std::string& path) {
  ParseOptions options;
  options.format = f.input_format.empty() ? InferInputFormat(path)
                                          : ParseInputFormat(f.input_format);
  options.policy = f.policy == "strict" ? LabelPolicy::kStrict
                                        : LabelPolicy::kLabelUnion;
  if (!f.labels.empty()) {
    try {
      options.labels = LabelSpace(SplitList(f.labels, ','));
    } catch (const EvalError& e) {
      throw UsageError(std::string("--labels: ") + e.what());
    }
  } else if (options.policy == LabelPolicy::kStrict) {
    throw UsageError("--policy strict requires --labels");
  }
  if (!f.discretize.empty()) {
    const auto bounds = ParseDoubles(f.discretize, "--discretize");
    if (bounds.size() != 2 || !(bounds[0] < bounds[1])) {
      throw UsageError("--discretize expects LO,HI with LO < HI");
    }
    options.discretize = std::make_pair(bounds[0], bounds[1]);
  }
  options.schema = {f.gold_column, f.pred_column, f.group_column};
  return options;
}

MetricOptions MakeMetricOptions(const EvalFlags& f, bool explicit_space) {
  MetricOptions options;
  options.include_empty_gold_classes = explicit_space;
  if (!f.priors.empty()) {
    auto in = OpenInput(f.priors);
    options.priors = LoadDistribution(in);
  }
  return options;
}

GroupedDataset LoadDataset(const std::string& path, const ParseOptions& options,
                           Warnings& warnings) {
  auto in = OpenInput(path);
  try {
    return ParsePredictions(in, options, &warnings);
  } catch (const EvalError& e) {
    throw EvalError(path + ": " + e.what());
  }
}

std::string GroupName(const std::string& key) {
  return key.empty() ? "(none)" : key;
}

void EmitWarnings(const std::string& slice, const Warnings& warnings,
                  std::ostream& err) {
  for (const auto& w : warnings) err << "warning: [" << slice << "] " << w << '\n';
}

Scale ScaleOf(bool percent) { return percent ? Scale::kPercent : Scale::kUnit; }

int Evaluate(const std::string& pred_path, const EvalFlags& f, std::ostream& out,
             std::ostream& err) {
  Warnings parse_warnings;
  const auto dataset = LoadDataset(pred_path, MakeParseOptions(f, pred_path),
                                   parse_warnings);
  EmitWarnings("input", parse_warnings, err);
  const auto metric_options = MakeMetricOptions(f, dataset.explicit_space());

  std::vector<NamedReport> reports;
  reports.push_back(
      {"all", MetricSuite(BuildConfusionMatrix(dataset.Overall()), metric_options)});
  if (f.group && dataset.has_groups()) {
    for (const auto& key : dataset.group_keys()) {
      try {
        reports.push_back(
            {GroupName(key),
             MetricSuite(BuildConfusionMatrix(dataset.Group(key, f.shared_space)),
                         metric_options)});
      } catch (const EvalError& e) {
        err << "warning: [" << GroupName(key) << "] group skipped: " << e.what()
            << '\n';
      }
    }
  }
  for (const auto& r : reports) EmitWarnings(r.name, r.report.warnings, err);
  RenderReports(reports, ParseOutputFormat(f.output), ScaleOf(f.percent), out);
  return kExitOk;
}

std::unordered_set<std::string> GoldLabels(const GroupedDataset& d) {
  std::unordered_set<std::string> labels;
  for (const auto& r : d.records()) labels.insert(r.gold);
  return labels;
}

int Compare(const std::string& system_path, const std::string& baseline_path,
            const EvalFlags& f, std::ostream& out, std::ostream& err) {
  const ParseOptions parse_options = MakeParseOptions(f, system_path);
  Warnings parse_warnings;
  auto system = LoadDataset(system_path, parse_options, parse_warnings);
  auto baseline = LoadDataset(baseline_path,
                              MakeParseOptions(f, baseline_path), parse_warnings);
  EmitWarnings("input", parse_warnings, err);

  if (parse_options.policy == LabelPolicy::kStrict &&
      GoldLabels(system) != GoldLabels(baseline)) {
    throw EvalError("incomparable label spaces: gold labels differ");
  }
  const bool explicit_space = system.explicit_space();
  if (!explicit_space) {
    std::vector<std::string> labels = system.space().labels();
    labels.insert(labels.end(), baseline.space().labels().begin(),
                  baseline.space().labels().end());
    const LabelSpace shared = LabelSpace::FirstSeen(labels);
    system = GroupedDataset(system.records(), shared, false);
    baseline = GroupedDataset(baseline.records(), shared, false);
  }
  const auto metric_options = MakeMetricOptions(f, explicit_space);

  std::vector<NamedReport> reports;
  auto add_triplet = [&](const std::string& prefix, const MetricReport& sys,
                         const MetricReport& base) {
    reports.push_back({prefix + "system", sys});
    reports.push_back({prefix + "baseline", base});
    reports.push_back({prefix + "delta", DeltaReport(sys, base)});
  };
  add_triplet("", MetricSuite(BuildConfusionMatrix(system.Overall()), metric_options),
              MetricSuite(BuildConfusionMatrix(baseline.Overall()), metric_options));

  if (f.group && system.has_groups()) {
    if (system.group_keys() != baseline.group_keys()) {
      throw EvalError("incomparable reports: group keys differ");
    }
    std::vector<MetricReport> system_groups;
    std::vector<MetricReport> baseline_groups;
    for (const auto& key : system.group_keys()) {
      try {
        auto sys = MetricSuite(BuildConfusionMatrix(system.Group(key, true)),
                               metric_options);
        auto base = MetricSuite(BuildConfusionMatrix(baseline.Group(key, true)),
                                metric_options);
        add_triplet(GroupName(key) + "/", sys, base);
        system_groups.push_back(std::move(sys));
        baseline_groups.push_back(std::move(base));
      } catch (const EvalError& e) {
        err << "warning: [" << GroupName(key) << "] group skipped: " << e.what()
            << '\n';
      }
    }
    if (!system_groups.empty()) {
      add_triplet("mean/", MeanReport(system_groups), MeanReport(baseline_groups));
    }
  }
  for (const auto& r : reports) EmitWarnings(r.name, r.report.warnings, err);
  RenderReports(reports, ParseOutputFormat(f.output), ScaleOf(f.percent), out);
  return kExitOk;
}

struct SimFlags {
  std::string prevalence;
  double skew = -1.0;
  double power = 0.0;
  std::string powers;
  std::string prevalences;
  std::string skews;
  std::string uniform;
  std::int64_t n = 100000;
  std::uint64_t seed = 0;
  int runs = 1;
  unsigned threads = 0;
  bool percent = false;
};

void AddSimFlags(CLI::App* cmd, SimFlags& f) {
  cmd->add_option("--n", f.n, "Samples per run")->check(CLI::PositiveNumber);
  cmd->add_option("--seed", f.seed, "Master seed");
  cmd->add_option("--runs", f.runs, "Repetitions per grid point")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--threads", f.threads, "Worker threads (0: hardware)");
  cmd->add_flag("--percent", f.percent, "Scale metrics by 100");
}

int RunSweep(const std::vector<ClassDistribution>& prevalences,
             const std::vector<double>& powers, const SimFlags& f,
             std::ostream& out) {
  SweepOptions options;
  options.n = f.n;
  options.seed = f.seed;
  options.runs = f.runs;
  options.threads = f.threads;
  const auto result = Sweep(prevalences, powers, options);
  WriteSweepCsv(result, out, f.percent ? 100.0 : 1.0);
  return kExitOk;
}

int Simulate(const SimFlags& f, std::ostream& out) {
  std::vector<ClassDistribution> prevalences;
  if (!f.prevalence.empty()) {
    prevalences.push_back(ParsePrevalence(f.prevalence, "--prevalence"));
  } else if (f.skew >= 0.0) {
    prevalences.push_back(BinarySkew(f.skew));
  } else {
    throw UsageError("simulate requires --prevalence or --skew");
  }
  return RunSweep(prevalences, {f.power}, f, out);
}

int SweepCommand(const SimFlags& f, std::ostream& out) {
  std::vector<ClassDistribution> prevalences;
  if (!f.prevalences.empty()) {
    for (const auto& spec : SplitList(f.prevalences, ';')) {
      prevalences.push_back(ParsePrevalence(spec, "--prevalences"));
    }
  }
  if (!f.skews.empty()) {
    for (double p : ParseDoubles(f.skews, "--skews")) {
      if (!(p >= 0.0 && p <= 1.0)) throw UsageError("--skews: values must lie in [0, 1]");
      prevalences.push_back(BinarySkew(p));
    }
  }
  if (!f.uniform.empty()) {
    for (const auto& item : SplitList(f.uniform, ',')) {
      const double k = ParseDouble(item, "--uniform");
      if (k < 2 || k != static_cast<double>(static_cast<int>(k))) {
        throw UsageError("--uniform: class counts must be integers >= 2");
      }
      prevalences.push_back(
          ClassDistribution::Uniform(IndexedLabelSpace(static_cast<std::size_t>(k))));
    }
  }
  if (prevalences.empty()) {
    throw UsageError("sweep requires --prevalences, --skews or --uniform");
  }
  const auto powers = ParseDoubles(f.powers, "--powers");
  for (double p : powers) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("--powers: values must lie in [0, 1]");
  }
  return RunSweep(prevalences, powers, f, out);
}

struct BaselineFlags {
  std::string mode;
  std::string train;
  std::string gold;
  std::string input_format;
  std::string out;
  std::uint64_t seed = 0;
};

int Baseline(const BaselineFlags& f, std::ostream& out) {
  auto train_in = OpenInput(f.train);
  const ClassDistribution train = LoadDistribution(train_in);
  auto gold_in = OpenInput(f.gold);
  const InputFormat format = f.input_format.empty()
                                 ? InferInputFormat(f.gold)
                                 : ParseInputFormat(f.input_format);
  const auto records = ReadGoldLabels(gold_in, format);
  std::vector<std::string> gold;
  gold.reserve(records.size());
  bool grouped = false;
  for (const auto& r : records) {
    gold.push_back(r.gold);
    grouped = grouped || r.group.has_value();
  }
  const auto set = MakeBaseline(ParseBaselineMode(f.mode), train, gold, f.seed);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!f.out.empty()) {
    file.open(f.out);
    if (!file) throw UsageError("cannot write " + f.out);
    sink = &file;
  }
  *sink << (grouped ? "gold,pred,group\n" : "gold,pred\n");
  for (std::size_t i = 0; i < set.size(); ++i) {
    *sink << CsvField(set.gold_label(i)) << ',' << CsvField(set.pred_label(i));
    if (grouped) *sink << ',' << CsvField(records[i].group.value_or(""));
    *sink << '\n';
  }
  return kExitOk;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Classification evaluation with chance-corrected metrics",
               "informed"};
  app.require_subcommand(1);

  std::string pred_path;
  EvalFlags evaluate_flags;
  auto* evaluate = app.add_subcommand("evaluate", "Score a predictions file");
  evaluate->add_option("--pred", pred_path, "Predictions file")
      ->required()
      ->check(CLI::ExistingFile);
  AddEvalFlags(evaluate, evaluate_flags);

  std::string system_path;
  std::string baseline_path;
  EvalFlags compare_flags;
  auto* compare =
      app.add_subcommand("compare", "Score a system against a baseline");
  compare->add_option("--system", system_path, "System predictions")
      ->required()
      ->check(CLI::ExistingFile);
  compare->add_option("--baseline", baseline_path, "Baseline predictions")
      ->required()
      ->check(CLI::ExistingFile);
  AddEvalFlags(compare, compare_flags);

  SimFlags simulate_flags;
  auto* simulate =
      app.add_subcommand("simulate", "Metric summary of one synthetic classifier");
  simulate->add_option("--prevalence", simulate_flags.prevalence,
                       "Class distribution p1,p2,...");
  simulate->add_option("--skew", simulate_flags.skew, "Binary prevalence p")
      ->check(CLI::Range(0.0, 1.0));
  simulate->add_option("--power", simulate_flags.power, "Predictive power")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  AddSimFlags(simulate, simulate_flags);

  SimFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Metric curves over a parameter grid");
  sweep->add_option("--powers", sweep_flags.powers, "Comma-separated powers")
      ->required();
  sweep->add_option("--prevalences", sweep_flags.prevalences,
                    "Distributions separated by ';', entries by ','");
  sweep->add_option("--skews", sweep_flags.skews, "Binary prevalences p");
  sweep->add_option("--uniform", sweep_flags.uniform, "Uniform class counts");
  AddSimFlags(sweep, sweep_flags);

  BaselineFlags baseline_flags;
  auto* baseline =
      app.add_subcommand("baseline", "Write predictions of a label-blind baseline");
  baseline->add_option("--mode", baseline_flags.mode)
      ->required()
      ->check(CLI::IsMember({"most-common", "prevalence-sample"}));
  baseline->add_option("--train", baseline_flags.train, "Train distribution")
      ->required()
      ->check(CLI::ExistingFile);
  baseline->add_option("--gold", baseline_flags.gold, "File with a gold column")
      ->required()
      ->check(CLI::ExistingFile);
  baseline->add_option("--seed", baseline_flags.seed, "Sampling seed");
  baseline->add_option("--input-format", baseline_flags.input_format)
      ->check(CLI::IsMember({"csv", "tsv", "jsonl"}));
  baseline->add_option("--out", baseline_flags.out, "Output path (default stdout)");

  std::vector<const char*> argv = {"informed"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*evaluate) return Evaluate(pred_path, evaluate_flags, out, err);
    if (*compare) {
      return Compare(system_path, baseline_path, compare_flags, out, err);
    }
    if (*simulate) return Simulate(simulate_flags, out);
    if (*sweep) return SweepCommand(sweep_flags, out);
    if (*baseline) return Baseline(baseline_flags, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EvalError& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvalError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitEvalError;
  }
  return kExitUsage;
}

}  // namespace informed::cli
