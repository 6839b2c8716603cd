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

#include <algorithm>
#include <cmath>
#include <random>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "informed/confusion_matrix.h"
#include "informed/distribution.h"
#include "informed/error.h"
#include "informed/label_space.h"

namespace informed {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

ClassificationSet FixtureF1() {
  ClassificationSet set(LabelSpace({"a", "b"}));
  for (int i = 0; i < 60; ++i) set.Add("a", "a");
  for (int i = 0; i < 20; ++i) set.Add("a", "b");
  for (int i = 0; i < 10; ++i) set.Add("b", "a");
  for (int i = 0; i < 10; ++i) set.Add("b", "b");
  return set;
}

template <typename Fn>
void ExpectEvalError(Fn fn, const std::string& fragment) {
  try {
    fn();
    FAIL() << "expected EvalError containing '" << fragment << "'";
  } catch (const EvalError& e) {
    EXPECT_THAT(e.what(), HasSubstr(fragment));
  }
}

TEST(LabelSpace, IndexIsInverseOfLookup) {
  LabelSpace space({"yes", "no", "maybe"});
  ASSERT_EQ(space.size(), 3u);
  for (ClassIndex i = 0; i < space.size(); ++i) {
    EXPECT_EQ(space.index_of(space.label(i)), i);
  }
}

TEST(LabelSpace, RejectsEmptyAndDuplicates) {
  ExpectEvalError([] { LabelSpace space({}); }, "empty label space");
  ExpectEvalError([] { LabelSpace space({"a", "b", "a"}); }, "duplicate label");
}

TEST(LabelSpace, ComparesBytesExactly) {
  LabelSpace space({"Yes", "yes"});
  EXPECT_EQ(space.size(), 2u);
  EXPECT_FALSE(space.contains("YES"));
  ExpectEvalError([&] { space.index_of("YES"); }, "unknown label");
}

TEST(LabelSpace, FirstSeenOrderIsStable) {
  const std::vector<std::string> seq = {"b", "a", "b", "c", "a"};
  EXPECT_THAT(LabelSpace::FirstSeen(seq).labels(), ElementsAre("b", "a", "c"));
  EXPECT_EQ(LabelSpace::FirstSeen(seq), LabelSpace::FirstSeen(seq));
}

TEST(ClassificationSet, FromLabelsInterleavesFirstSeen) {
  auto set = ClassificationSet::FromLabels({"x", "y"}, {"z", "x"});
  EXPECT_THAT(set.space().labels(), ElementsAre("x", "z", "y"));
  ExpectEvalError([] { ClassificationSet::FromLabels({"a"}, {}); },
                  "length mismatch");
}

TEST(BuildConfusionMatrix, CountsPredByGold) {
  ClassificationSet set(LabelSpace({"a", "b"}));
  set.Add("a", "a");
  set.Add("a", "a");
  set.Add("b", "b");
  const auto cm = BuildConfusionMatrix(set);
  EXPECT_EQ(cm.rows(), (std::vector<std::vector<Count>>{{2, 0}, {0, 1}}));
  EXPECT_EQ(cm.n(), 3);
}

TEST(BuildConfusionMatrix, FixtureF1MatchesPerSampleTally) {
  const auto set = FixtureF1();
  // Tally loop independent of ConfusionMatrix.
  std::vector<std::vector<Count>> tally(2, std::vector<Count>(2, 0));
  for (std::size_t i = 0; i < set.size(); ++i) {
    tally[set.pred_label(i) == "a" ? 0 : 1][set.gold_label(i) == "a" ? 0 : 1]++;
  }
  const auto cm = BuildConfusionMatrix(set);
  EXPECT_EQ(cm.rows(), tally);
  EXPECT_EQ(cm.rows(), (std::vector<std::vector<Count>>{{60, 10}, {20, 10}}));
  EXPECT_EQ(cm.n(), 100);
}

TEST(BuildConfusionMatrix, RejectsEmptyAndUnknown) {
  ExpectEvalError(
      [] { BuildConfusionMatrix(ClassificationSet(LabelSpace({"a"}))); },
      "empty classification set");
  ClassificationSet set(LabelSpace({"a"}));
  ExpectEvalError([&] { set.Add("a", "b"); }, "unknown label");
}

TEST(ConfusionMatrix, RejectsNegativeCells) {
  ExpectEvalError(
      [] { ConfusionMatrix cm(LabelSpace({"a", "b"}), {{1, -1}, {0, 0}}); },
      "negative");
}

TEST(PerClassContingency, FixtureF1ClassA) {
  const auto cm = BuildConfusionMatrix(FixtureF1());
  EXPECT_EQ(PerClassContingency(cm, "a"), (ContingencyCells{60, 10, 20, 10}));
  EXPECT_EQ(PerClassContingency(cm, "b"), (ContingencyCells{10, 20, 10, 60}));
}

TEST(PerClassContingency, DiagonalAndAbsentClass) {
  ConfusionMatrix diag(LabelSpace({"a", "b"}), {{5, 0}, {0, 5}});
  EXPECT_EQ(PerClassContingency(diag, "a"), (ContingencyCells{5, 0, 0, 5}));
  ConfusionMatrix absent(LabelSpace({"a", "b"}), {{3, 0}, {0, 0}});
  EXPECT_EQ(PerClassContingency(absent, "b"), (ContingencyCells{0, 0, 0, 3}));
  ExpectEvalError([&] { PerClassContingency(absent, "c"); }, "unknown label");
}

TEST(Distribution, PrevalenceAndBias) {
  const auto cm = BuildConfusionMatrix(FixtureF1());
  EXPECT_THAT(Prevalence(cm).probs(), ElementsAre(0.8, 0.2));
  EXPECT_THAT(Bias(cm).probs(), ElementsAre(0.7, 0.3));

  ConfusionMatrix diag(LabelSpace({"a", "b"}), {{5, 0}, {0, 5}});
  EXPECT_THAT(Prevalence(diag).probs(), ElementsAre(0.5, 0.5));
  EXPECT_THAT(Bias(diag).probs(), ElementsAre(0.5, 0.5));

  ConfusionMatrix single(LabelSpace({"a"}), {{7}});
  EXPECT_THAT(Prevalence(single).probs(), ElementsAre(1.0));
}

TEST(Distribution, EmptyMatrix) {
  ConfusionMatrix empty(LabelSpace({"a", "b"}));
  ExpectEvalError([&] { Prevalence(empty); }, "empty matrix");
  ExpectEvalError([&] { Bias(empty); }, "empty matrix");
}

TEST(Distribution, RejectsNonSimplex) {
  ExpectEvalError([] { ClassDistribution d(LabelSpace({"a", "b"}), {0.7, 0.7}); },
                  "not a distribution");
  ExpectEvalError([] { ClassDistribution d(LabelSpace({"a", "b"}), {1.2, -0.2}); },
                  "not a distribution");
}

TEST(Entropy, Examples) {
  const std::vector<double> uniform2 = {0.5, 0.5};
  const std::vector<double> skewed3 = {0.5, 0.25, 0.25};
  const std::vector<double> certain = {1.0, 0.0};
  EXPECT_DOUBLE_EQ(Entropy(uniform2), 1.0);
  EXPECT_DOUBLE_EQ(Entropy(skewed3), 1.5);
  EXPECT_DOUBLE_EQ(Entropy(certain), 0.0);
}

TEST(Entropy, PermutationInvariantAndMaximalAtUniform) {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int c = 2 + static_cast<int>(gen() % 6);
    std::vector<double> p(c);
    double total = 0.0;
    for (double& v : p) total += (v = std::uniform_real_distribution<>(0, 1)(gen));
    for (double& v : p) v /= total;
    auto shuffled = p;
    std::shuffle(shuffled.begin(), shuffled.end(), gen);
    EXPECT_NEAR(Entropy(p), Entropy(shuffled), 1e-12);
    EXPECT_LE(Entropy(p), std::log2(c) + 1e-12);
    EXPECT_GE(Entropy(p), 0.0);
    const std::vector<double> uniform(c, 1.0 / c);
    EXPECT_NEAR(Entropy(uniform), std::log2(c), 1e-12);
  }
}

TEST(ConfusionMatrixProperty, MarginalsAndTraceOnRandomSets) {
  std::mt19937 gen(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int c = 1 + static_cast<int>(gen() % 6);
    const int n = 1 + static_cast<int>(gen() % 60);
    std::vector<std::string> labels;
    for (int k = 0; k < c; ++k) labels.push_back("k" + std::to_string(k));
    ClassificationSet set{LabelSpace(labels)};
    std::vector<Count> gold(c, 0);
    std::vector<Count> pred(c, 0);
    for (int i = 0; i < n; ++i) {
      const int g = static_cast<int>(gen() % c);
      const int p = static_cast<int>(gen() % c);
      set.Add(static_cast<ClassIndex>(g), static_cast<ClassIndex>(p));
      gold[g]++;
      pred[p]++;
    }
    const auto cm = BuildConfusionMatrix(set);
    EXPECT_EQ(cm.gold_counts(), gold);
    EXPECT_EQ(cm.pred_counts(), pred);
    Count tp = 0, fp = 0, fn = 0;
    for (int k = 0; k < c; ++k) {
      const auto cells = PerClassContingency(cm, static_cast<ClassIndex>(k));
      EXPECT_EQ(cells.total(), cm.n());
      tp += cells.tp;
      fp += cells.fp;
      fn += cells.fn;
    }
    EXPECT_EQ(tp + fn, cm.n());
    EXPECT_EQ(tp + fp, cm.n());
    EXPECT_EQ(tp, cm.trace());
  }
}

}  // namespace
}  // namespace informed
