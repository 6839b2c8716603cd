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

#include <cmath>
#include <sstream>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "informed/confusion_matrix.h"
#include "informed/error.h"
#include "informed/metrics.h"
#include "informed/random.h"
#include "informed/simulation.h"

namespace informed {
namespace {

SimulationConfig Config(std::vector<double> prevalence, double power,
                        std::int64_t n = 100000, std::uint64_t seed = 17) {
  const std::size_t c = prevalence.size();
  return SimulationConfig{ClassDistribution(IndexedLabelSpace(c), std::move(prevalence)),
                          power, n, seed, 1};
}

double SumSquares(const std::vector<double>& p) {
  double s = 0.0;
  for (double v : p) s += v * v;
  return s;
}

TEST(Random, DeriveSeedSeparatesStreams) {
  EXPECT_NE(DeriveSeed(1, 0, 0), DeriveSeed(1, 0, 1));
  EXPECT_NE(DeriveSeed(1, 0, 1), DeriveSeed(1, 1, 0));
  EXPECT_NE(DeriveSeed(1, 0, 0), DeriveSeed(2, 0, 0));
  EXPECT_EQ(DeriveSeed(5, 3, 2), DeriveSeed(5, 3, 2));
}

TEST(Random, UniformInUnitInterval) {
  Rng rng(3);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.Uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Random, CategoricalSkipsZeroMass) {
  const std::vector<double> probs = {0.0, 0.3, 0.0, 0.7, 0.0};
  CategoricalSampler sampler(probs);
  Rng rng(9);
  std::vector<int> counts(5, 0);
  for (int i = 0; i < 20000; ++i) counts[sampler(rng)]++;
  EXPECT_EQ(counts[0] + counts[2] + counts[4], 0);
  EXPECT_NEAR(counts[1] / 20000.0, 0.3, 0.02);
}

TEST(SimulationConfig, Validation) {
  EXPECT_THROW(Config({0.5, 0.5}, 1.5).Validate(), EvalError);
  EXPECT_THROW(Config({0.5, 0.5}, -0.1).Validate(), EvalError);
  EXPECT_THROW(Config({0.5, 0.5}, 0.5, 0).Validate(), EvalError);
  auto c = Config({0.5, 0.5}, 0.5);
  c.runs = 0;
  EXPECT_THROW(c.Validate(), EvalError);
}

TEST(Simulate, PowerOneIsPerfect) {
  const auto set = Simulate(Config({0.7, 0.2, 0.1}, 1.0, 5000));
  for (const auto& p : set.pairs()) EXPECT_EQ(p.gold, p.pred);
  EXPECT_EQ(Informedness(BuildConfusionMatrix(set)).overall, 1.0);
}

TEST(Simulate, PowerZeroSkewedBinary) {
  const auto cm = BuildConfusionMatrix(Simulate(Config({0.9, 0.1}, 0.0)));
  EXPECT_NEAR(Informedness(cm).overall, 0.0, 0.02);
  // Independent draws: accuracy -> sum_c p_c^2.
  EXPECT_NEAR(Accuracy(cm), 0.82, 0.01);
}

TEST(Simulate, HalfPowerGivesHalfInformedness) {
  for (const auto& prev : std::vector<std::vector<double>>{
           {0.5, 0.5}, {0.9, 0.1}, {0.6, 0.2, 0.1, 0.05, 0.05}}) {
    const auto cm = BuildConfusionMatrix(Simulate(Config(prev, 0.5)));
    EXPECT_NEAR(Informedness(cm).overall, 0.5, 0.02);
    EXPECT_NEAR(Accuracy(cm), 0.5 + 0.5 * SumSquares(prev), 0.02);
  }
}

TEST(Simulate, DeterministicPerSeedAndStream) {
  const auto config = Config({0.3, 0.7}, 0.4, 1000);
  const auto a = Simulate(config);
  const auto b = Simulate(config);
  const auto c = Simulate(config, 0, 1);
  ASSERT_EQ(a.size(), b.size());
  bool differs = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.pairs()[i].gold, b.pairs()[i].gold);
    EXPECT_EQ(a.pairs()[i].pred, b.pairs()[i].pred);
    differs = differs || a.pairs()[i].gold != c.pairs()[i].gold;
  }
  EXPECT_TRUE(differs);
}

TEST(Sweep, DegenerateGridMatchesSingleSimulation) {
  const auto config = Config({0.6, 0.4}, 0.3, 20000, 123);
  SweepOptions options;
  options.n = config.n;
  options.seed = config.seed;
  const auto result = Sweep({config.prevalence}, {0.3}, options);
  const auto report = MetricSuite(BuildConfusionMatrix(Simulate(config)));
  for (const auto& name : SweepMetricNames()) {
    const auto& row = result.at(0, 0, name);
    EXPECT_EQ(row.mean, report.value(name)) << name;
    EXPECT_EQ(row.stddev, 0.0);
    EXPECT_EQ(row.runs, 1);
  }
}

TEST(Sweep, BalancedBinaryHalfPowerConvergesOnThreeQuarters) {
  SweepOptions options;
  options.seed = 5;
  const auto result = Sweep({BinarySkew(0.5)}, {0.5}, options);
  EXPECT_NEAR(result.at(0, 0, "accuracy").mean, 0.75, 0.01);
  EXPECT_NEAR(result.at(0, 0, "f1_macro").mean, 0.75, 0.01);
  EXPECT_NEAR(result.at(0, 0, "informedness").mean, 0.5, 0.02);
}

TEST(Sweep, UniformFiveClassInformednessTracksPower) {
  const std::vector<double> powers = {0, 0.25, 0.5, 0.75, 1};
  SweepOptions options;
  options.seed = 8;
  const auto result = Sweep(
      {ClassDistribution::Uniform(IndexedLabelSpace(5))}, powers, options);
  double previous = -1.0;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    const double inf = result.at(0, i, "informedness").mean;
    EXPECT_NEAR(inf, powers[i], 0.02);
    EXPECT_GE(inf, previous);
    previous = inf;
  }
  // Guessing credit retained by NIT at zero power.
  EXPECT_NEAR(result.at(0, 0, "nit").mean, 1.0 / 5, 0.02);
  EXPECT_NEAR(result.at(0, 0, "kappa").mean, 0.0, 0.02);
  EXPECT_NEAR(result.at(0, 0, "mcc").mean, 0.0, 0.02);
}

TEST(Sweep, StdShrinksWithSampleCount) {
  SweepOptions small;
  small.n = 2000;
  small.runs = 20;
  small.seed = 1;
  SweepOptions large = small;
  large.n = 20000;
  const auto prev = std::vector<ClassDistribution>{BinarySkew(0.7)};
  const double s_small = Sweep(prev, {0.5}, small).at(0, 0, "informedness").stddev;
  const double s_large = Sweep(prev, {0.5}, large).at(0, 0, "informedness").stddev;
  EXPECT_GT(s_small, 0.0);
  EXPECT_GE(s_small / s_large, 2.0);
}

TEST(Sweep, ThreadCountDoesNotChangeOutput) {
  SweepOptions options;
  options.n = 3000;
  options.runs = 4;
  options.seed = 77;
  const std::vector<ClassDistribution> prev = {BinarySkew(0.8),
                                               ClassDistribution::Uniform(IndexedLabelSpace(3))};
  const std::vector<double> powers = {0.0, 0.5, 1.0};
  std::string csv[2];
  for (unsigned threads : {1u, 4u}) {
    options.threads = threads;
    std::ostringstream out;
    WriteSweepCsv(Sweep(prev, powers, options), out);
    csv[threads == 1 ? 0 : 1] = out.str();
  }
  EXPECT_EQ(csv[0], csv[1]);
}

TEST(Sweep, CoversGridExactlyOnce) {
  SweepOptions options;
  options.n = 500;
  const auto result = Sweep({BinarySkew(0.5), BinarySkew(0.9)}, {0.1, 0.9}, options);
  EXPECT_EQ(result.rows.size(), 2 * 2 * SweepMetricNames().size());
  EXPECT_EQ(result.at(1, 1, "nit").prevalence_spec, "0.9;0.1");
  EXPECT_EQ(result.at(1, 1, "nit").power, 0.9);
}

TEST(Sweep, CsvHeaderAndScale) {
  SweepOptions options;
  options.n = 100;
  const auto result = Sweep({BinarySkew(0.5)}, {1.0}, options);
  std::ostringstream out;
  WriteSweepCsv(result, out, 100.0);
  const std::string csv = out.str();
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "prevalence_spec,power,metric,mean,std,runs,n,seed");
  EXPECT_NE(csv.find("0.5;0.5,1,accuracy,100,0,1,100,0\n"), std::string::npos);
}

TEST(Sweep, InvalidGrid) {
  SweepOptions options;
  EXPECT_THROW(Sweep({}, {0.5}, options), EvalError);
  EXPECT_THROW(Sweep({BinarySkew(0.5)}, {}, options), EvalError);
  EXPECT_THROW(Sweep({BinarySkew(0.5)}, {1.2}, options), EvalError);
}

}  // namespace
}  // namespace informed
