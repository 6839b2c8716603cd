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

// Randomized checks of metric identities and of agreement with the
// brute-force oracle.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "gtest/gtest.h"
#include "informed/confusion_matrix.h"
#include "informed/error.h"
#include "informed/metrics.h"
#include "oracle/brute_force.h"

namespace informed {
namespace {

constexpr double kTol = 1e-9;
constexpr double kIdentityTol = 1e-12;
constexpr int kTrials = 2000;

struct RandomCase {
  int num_classes = 0;
  std::vector<oracle::Sample> samples;
  ClassificationSet set{LabelSpace({"?"})};
};

LabelSpace Classes(int c) {
  std::vector<std::string> labels;
  for (int k = 0; k < c; ++k) labels.push_back("class" + std::to_string(k));
  return LabelSpace(labels);
}

RandomCase Draw(std::mt19937_64& gen, int min_classes = 2, int max_classes = 6) {
  RandomCase rc;
  rc.num_classes = std::uniform_int_distribution<int>(min_classes, max_classes)(gen);
  const int n = std::uniform_int_distribution<int>(1, 50)(gen);
  // Skewed class weights so that some classes are often absent.
  std::vector<double> weights(rc.num_classes);
  for (double& w : weights) w = std::uniform_real_distribution<>(0.05, 1.0)(gen);
  std::discrete_distribution<int> pick(weights.begin(), weights.end());
  const double skill = std::uniform_real_distribution<>(0.0, 1.0)(gen);
  rc.set = ClassificationSet(Classes(rc.num_classes));
  for (int i = 0; i < n; ++i) {
    const int g = pick(gen);
    const int p = std::uniform_real_distribution<>(0, 1)(gen) < skill ? g : pick(gen);
    rc.samples.push_back({g, p});
    rc.set.Add(static_cast<ClassIndex>(g), static_cast<ClassIndex>(p));
  }
  return rc;
}

void ExpectVectorNear(const std::vector<double>& a, const std::vector<double>& b,
                      double tol, const char* what) {
  ASSERT_EQ(a.size(), b.size()) << what;
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], tol) << what << i;
}

void CheckAgainstOracle(const RandomCase& rc, bool include_empty) {
  const auto cm = BuildConfusionMatrix(rc.set);
  const auto expected = oracle::Compute(rc.samples, rc.num_classes, include_empty);
  MetricOptions options;
  options.include_empty_gold_classes = include_empty;

  EXPECT_NEAR(Accuracy(cm), expected.accuracy, kTol);
  EXPECT_NEAR(BalancedAccuracy(cm), expected.balanced_accuracy, kTol);
  ExpectVectorNear(Recall(cm), expected.recall, kTol, "recall");
  const auto f = FMeasure(cm, options);
  EXPECT_NEAR(f.macro, expected.f1_macro, kTol);
  EXPECT_NEAR(f.micro, expected.f1_micro, kTol);
  ExpectVectorNear(f.per_class, expected.f1, kTol, "f1");
  EXPECT_NEAR(CohenKappa(cm), expected.kappa, kTol);
  const auto mcc = Mcc(cm, options);
  EXPECT_NEAR(mcc.multiclass, expected.mcc, kTol);
  EXPECT_NEAR(mcc.macro, expected.mcc_macro, kTol);
  ExpectVectorNear(mcc.per_class, expected.mcc_per_class, kTol, "mcc");
  const auto nit = Nit(cm, options);
  EXPECT_NEAR(nit.nit, expected.nit, kTol);
  EXPECT_NEAR(nit.mutual_information, expected.mutual_information, kTol);
  if (expected.informedness) {
    const auto inf = Informedness(cm);
    EXPECT_NEAR(inf.overall, *expected.informedness, kTol);
    ExpectVectorNear(inf.per_class, expected.youden, kTol, "youden");
  } else {
    EXPECT_THROW(Informedness(cm), EvalError);
  }
}

TEST(MetricsOracle, RandomMatricesMatchBruteForce) {
  std::mt19937_64 gen(20240601);
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto rc = Draw(gen);
    SCOPED_TRACE("trial " + std::to_string(trial));
    CheckAgainstOracle(rc, false);
  }
}

TEST(MetricsOracle, ExplicitSpaceMatchesBruteForce) {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 500; ++trial) {
    const auto rc = Draw(gen);
    SCOPED_TRACE("trial " + std::to_string(trial));
    CheckAgainstOracle(rc, true);
  }
}

TEST(MetricsIdentity, MicroF1EqualsAccuracyExactly) {
  std::mt19937_64 gen(1);
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto cm = BuildConfusionMatrix(Draw(gen).set);
    EXPECT_EQ(FMeasure(cm).micro, Accuracy(cm));
  }
}

TEST(MetricsIdentity, BinaryInformednessIsRescaledBalancedAccuracy) {
  std::mt19937_64 gen(2);
  int checked = 0;
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto cm = BuildConfusionMatrix(Draw(gen, 2, 2).set);
    if (cm.num_gold_classes() < 2) continue;
    ++checked;
    EXPECT_NEAR(Informedness(cm).overall, 2 * BalancedAccuracy(cm) - 1, kIdentityTol);
    // Youden's J.
    const auto a = PerClassContingency(cm, ClassIndex{0});
    const double tpr = static_cast<double>(a.tp) / (a.tp + a.fn);
    const double tnr = static_cast<double>(a.tn) / (a.tn + a.fp);
    EXPECT_NEAR(Informedness(cm).overall, tpr + tnr - 1, kIdentityTol);
  }
  EXPECT_GT(checked, kTrials / 2);
}

TEST(MetricsIdentity, BinaryMulticlassMccEqualsPerClassMcc) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto cm = BuildConfusionMatrix(Draw(gen, 2, 2).set);
    const auto mcc = Mcc(cm);
    EXPECT_NEAR(mcc.multiclass, mcc.per_class[0], kIdentityTol);
    EXPECT_NEAR(mcc.multiclass, mcc.per_class[1], kIdentityTol);
  }
}

TEST(MetricsIdentity, PayoffFormEqualsRecallSumForm) {
  std::mt19937_64 gen(4);
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto cm = BuildConfusionMatrix(Draw(gen).set);
    const std::size_t c_eff = cm.num_gold_classes();
    if (c_eff < 2) continue;
    const auto recall = Recall(cm);
    const double closed =
        (std::accumulate(recall.begin(), recall.end(), 0.0) - 1.0) / (c_eff - 1);
    EXPECT_NEAR(Informedness(cm).overall, closed, kIdentityTol);
  }
}

TEST(MetricsIdentity, IndependentPredictionScoresZero) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 500; ++trial) {
    const int c = std::uniform_int_distribution<int>(2, 6)(gen);
    std::vector<Count> row_weight(c);
    std::vector<Count> col_weight(c);
    for (auto& w : row_weight) w = std::uniform_int_distribution<Count>(0, 9)(gen);
    for (auto& w : col_weight) w = std::uniform_int_distribution<Count>(1, 9)(gen);
    if (std::accumulate(row_weight.begin(), row_weight.end(), Count{0}) == 0) {
      row_weight[0] = 1;
    }
    std::vector<std::vector<Count>> rows(c, std::vector<Count>(c));
    for (int p = 0; p < c; ++p) {
      for (int g = 0; g < c; ++g) rows[p][g] = row_weight[p] * col_weight[g];
    }
    const ConfusionMatrix cm(Classes(c), rows);
    EXPECT_NEAR(Informedness(cm).overall, 0.0, kIdentityTol);
    EXPECT_NEAR(CohenKappa(cm), 0.0, kIdentityTol);
    EXPECT_NEAR(Mcc(cm).multiclass, 0.0, kIdentityTol);
  }
}

TEST(MetricsProperty, PermutationEquivariance) {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 500; ++trial) {
    const auto rc = Draw(gen);
    const auto cm = BuildConfusionMatrix(rc.set);
    if (cm.num_gold_classes() < 2) continue;
    std::vector<ClassIndex> perm(rc.num_classes);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), gen);
    ClassificationSet relabeled(Classes(rc.num_classes));
    for (const auto& s : rc.samples) relabeled.Add(perm[s.gold], perm[s.pred]);
    const auto a = MetricSuite(cm);
    const auto b = MetricSuite(BuildConfusionMatrix(relabeled));
    for (const char* m : {"accuracy", "balanced_accuracy", "f1_macro", "kappa",
                          "informedness", "mcc", "nit"}) {
      EXPECT_NEAR(a.value(m), b.value(m), kIdentityTol) << m;
    }
  }
}

TEST(MetricsProperty, BoundsHoldOnRandomMatrices) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < kTrials; ++trial) {
    const auto cm = BuildConfusionMatrix(Draw(gen).set);
    const double eps = 1e-12;
    for (double v : {Accuracy(cm), BalancedAccuracy(cm), FMeasure(cm).macro}) {
      EXPECT_GE(v, -eps);
      EXPECT_LE(v, 1 + eps);
    }
    for (double v : {CohenKappa(cm), Mcc(cm).multiclass, Mcc(cm).macro}) {
      EXPECT_GE(v, -1 - eps);
      EXPECT_LE(v, 1 + eps);
    }
    const double nit = Nit(cm).nit;
    EXPECT_GT(nit, 0.0);
    EXPECT_LE(nit, 1 + eps);
    const std::size_t c_eff = cm.num_gold_classes();
    if (c_eff >= 2) {
      const double inf = Informedness(cm).overall;
      EXPECT_GE(inf, -1.0 / (c_eff - 1) - eps);
      EXPECT_LE(inf, 1 + eps);
    }
  }
}

}  // namespace
}  // namespace informed
