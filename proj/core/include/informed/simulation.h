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

// Synthetic classifier with a fixed predictive power. For each sample the
// gold class is drawn from the prevalence; with probability `power` the
// prediction copies it, otherwise the prediction is an independent draw from
// the same prevalence (which may still hit the gold class).

#ifndef INFORMED_SIMULATION_H_
#define INFORMED_SIMULATION_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "informed/distribution.h"
#include "informed/label_space.h"
#include "informed/metrics.h"

namespace informed {

struct SimulationConfig {
  ClassDistribution prevalence;
  double power = 0.0;
  std::int64_t n = 100000;
  std::uint64_t seed = 0;
  int runs = 1;

  // Throws EvalError on power outside [0, 1], n < 1 or runs < 1.
  void Validate() const;
};

// Labels "c0", "c1", ... for an anonymous class distribution.
LabelSpace IndexedLabelSpace(std::size_t num_classes);
// Binary (p, 1 - p).
ClassDistribution BinarySkew(double p);

// One classification set drawn with stream (seed, 0, 0).
ClassificationSet Simulate(const SimulationConfig& config);
// Same procedure on stream (seed, point, run).
ClassificationSet Simulate(const SimulationConfig& config, std::uint64_t point,
                           std::uint64_t run);

struct SweepRow {
  std::string prevalence_spec;
  double power = 0.0;
  std::string metric;
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for one run
  int runs = 1;
};

struct SweepResult {
  std::int64_t n = 0;
  std::uint64_t seed = 0;
  std::size_t num_powers = 0;
  // Grid order: prevalence-major, then power, then metric.
  std::vector<SweepRow> rows;

  const SweepRow& at(std::size_t prevalence_index, std::size_t power_index,
                     std::string_view metric) const;
};

struct SweepOptions {
  std::int64_t n = 100000;
  std::uint64_t seed = 0;
  int runs = 1;
  // Worker threads; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

// Metrics recorded per grid point.
const std::vector<std::string>& SweepMetricNames();

// "0.5;0.5" style spec of a distribution.
std::string PrevalenceSpec(const ClassDistribution& d);

// Simulates every (prevalence, power, run) cell on its own derived stream and
// summarizes the metric suite per grid point. Output is independent of the
// thread count.
SweepResult Sweep(const std::vector<ClassDistribution>& prevalences,
                  const std::vector<double>& powers, const SweepOptions& options);

// Columns: prevalence_spec,power,metric,mean,std,runs,n,seed. `scale`
// multiplies mean and std.
void WriteSweepCsv(const SweepResult& result, std::ostream& out,
                   double scale = 1.0);

}  // namespace informed

#endif  // INFORMED_SIMULATION_H_
