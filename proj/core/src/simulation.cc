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

#include "informed/simulation.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "informed/confusion_matrix.h"
#include "informed/error.h"
#include "informed/random.h"

namespace informed {
namespace {

std::string FormatNumber(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

}  // namespace

void SimulationConfig::Validate() const {
  if (!(power >= 0.0 && power <= 1.0)) {
    throw EvalError("invalid power: must lie in [0, 1]");
  }
  if (n < 1) throw EvalError("invalid n: must be at least 1");
  if (runs < 1) throw EvalError("invalid runs: must be at least 1");
}

LabelSpace IndexedLabelSpace(std::size_t num_classes) {
  std::vector<std::string> labels;
  labels.reserve(num_classes);
  for (std::size_t c = 0; c < num_classes; ++c) {
    labels.push_back("c" + std::to_string(c));
  }
  return LabelSpace(std::move(labels));
}

ClassDistribution BinarySkew(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw EvalError("invalid skew: must lie in [0, 1]");
  return ClassDistribution(IndexedLabelSpace(2), {p, 1.0 - p});
}

ClassificationSet Simulate(const SimulationConfig& config) {
  return Simulate(config, 0, 0);
}

ClassificationSet Simulate(const SimulationConfig& config, std::uint64_t point,
                           std::uint64_t run) {
  config.Validate();
  const CategoricalSampler sampler(config.prevalence.probs());
  Rng rng(DeriveSeed(config.seed, point, run));
  ClassificationSet set(config.prevalence.space());
  set.reserve(static_cast<std::size_t>(config.n));
  for (std::int64_t i = 0; i < config.n; ++i) {
    const ClassIndex gold = sampler(rng);
    const ClassIndex pred = rng.Uniform() < config.power ? gold : sampler(rng);
    set.Add(gold, pred);
  }
  return set;
}

const std::vector<std::string>& SweepMetricNames() {
  static const std::vector<std::string> kNames = {
      "accuracy", "balanced_accuracy", "f1_macro", "kappa",
      "informedness", "mcc", "mcc_macro", "nit"};
  return kNames;
}

std::string PrevalenceSpec(const ClassDistribution& d) {
  std::string spec;
  for (double p : d.probs()) {
    if (!spec.empty()) spec += ";";
    spec += FormatNumber(p);
  }
  return spec;
}

const SweepRow& SweepResult::at(std::size_t prevalence_index,
                                std::size_t power_index,
                                std::string_view metric) const {
  const auto& names = SweepMetricNames();
  const auto it = std::find(names.begin(), names.end(), metric);
  if (it == names.end()) throw EvalError("missing metric: " + std::string(metric));
  const std::size_t per_point = names.size();
  const std::size_t index = (prevalence_index * num_powers + power_index) * per_point +
                            static_cast<std::size_t>(it - names.begin());
  return rows.at(index);
}

SweepResult Sweep(const std::vector<ClassDistribution>& prevalences,
                  const std::vector<double>& powers, const SweepOptions& options) {
  if (prevalences.empty() || powers.empty()) throw EvalError("empty sweep grid");
  if (options.runs < 1) throw EvalError("invalid runs: must be at least 1");
  if (options.n < 1) throw EvalError("invalid n: must be at least 1");
  for (double p : powers) {
    if (!(p >= 0.0 && p <= 1.0)) throw EvalError("invalid power: must lie in [0, 1]");
  }

  const auto& names = SweepMetricNames();
  const std::size_t num_points = prevalences.size() * powers.size();
  const std::size_t runs = static_cast<std::size_t>(options.runs);
  const std::size_t num_tasks = num_points * runs;
  // values[task * names.size() + metric]
  std::vector<double> values(num_tasks * names.size(), 0.0);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t task = next++; task < num_tasks; task = next++) {
      const std::size_t point = task / runs;
      const std::size_t run = task % runs;
      try {
        SimulationConfig config{prevalences[point / powers.size()],
                                powers[point % powers.size()], options.n,
                                options.seed, options.runs};
        const auto report =
            MetricSuite(BuildConfusionMatrix(Simulate(config, point, run)));
        for (std::size_t m = 0; m < names.size(); ++m) {
          values[task * names.size() + m] = report.value(names[m]);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = num_tasks;
      }
    }
  };

  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, num_tasks));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  SweepResult result;
  result.n = options.n;
  result.seed = options.seed;
  result.num_powers = powers.size();
  result.rows.reserve(num_points * names.size());
  for (std::size_t point = 0; point < num_points; ++point) {
    const std::string spec = PrevalenceSpec(prevalences[point / powers.size()]);
    const double power = powers[point % powers.size()];
    for (std::size_t m = 0; m < names.size(); ++m) {
      double sum = 0.0;
      for (std::size_t r = 0; r < runs; ++r) {
        sum += values[(point * runs + r) * names.size() + m];
      }
      const double mean = sum / static_cast<double>(runs);
      double sq = 0.0;
      for (std::size_t r = 0; r < runs; ++r) {
        const double d = values[(point * runs + r) * names.size() + m] - mean;
        sq += d * d;
      }
      const double stddev =
          runs > 1 ? std::sqrt(sq / static_cast<double>(runs - 1)) : 0.0;
      result.rows.push_back({spec, power, names[m], mean, stddev, options.runs});
    }
  }
  return result;
}

void WriteSweepCsv(const SweepResult& result, std::ostream& out, double scale) {
  out << "prevalence_spec,power,metric,mean,std,runs,n,seed\n";
  for (const auto& row : result.rows) {
    out << row.prevalence_spec << ',' << FormatNumber(row.power) << ','
        << row.metric << ',' << FormatNumber(row.mean * scale) << ','
        << FormatNumber(row.stddev * scale) << ',' << row.runs << ','
        << result.n << ',' << result.seed << '\n';
  }
}

}  // namespace informed
