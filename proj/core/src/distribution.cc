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

#include "informed/distribution.h"

#include <cmath>
#include <string>

#include "informed/error.h"

namespace informed {

ClassDistribution::ClassDistribution(LabelSpace space, std::vector<double> probs)
    : space_(std::move(space)), probs_(std::move(probs)) {
  if (probs_.size() != space_.size()) {
    throw EvalError("distribution size does not match label space");
  }
  double total = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw EvalError("not a distribution: entry outside [0, 1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kSimplexTolerance) {
    throw EvalError("not a distribution: entries sum to " +
                    std::to_string(total));
  }
}

ClassDistribution ClassDistribution::FromCounts(LabelSpace space,
                                                std::span<const Count> counts) {
  Count total = 0;
  for (Count c : counts) {
    if (c < 0) throw EvalError("negative count");
    total += c;
  }
  if (total == 0) throw EvalError("empty matrix");
  std::vector<double> probs;
  probs.reserve(counts.size());
  for (Count c : counts) {
    probs.push_back(static_cast<double>(c) / static_cast<double>(total));
  }
  return ClassDistribution(std::move(space), std::move(probs));
}

ClassDistribution ClassDistribution::Uniform(LabelSpace space) {
  const std::size_t c = space.size();
  return ClassDistribution(std::move(space), std::vector<double>(c, 1.0 / c));
}

double ClassDistribution::prob(std::string_view label) const {
  auto index = space_.find(label);
  return index ? probs_[*index] : 0.0;
}

ClassDistribution Prevalence(const ConfusionMatrix& cm) {
  if (cm.n() == 0) throw EvalError("empty matrix");
  const auto counts = cm.gold_counts();
  return ClassDistribution::FromCounts(cm.space(), counts);
}

ClassDistribution Bias(const ConfusionMatrix& cm) {
  if (cm.n() == 0) throw EvalError("empty matrix");
  const auto counts = cm.pred_counts();
  return ClassDistribution::FromCounts(cm.space(), counts);
}

double Entropy(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    if (p > 0.0) h -= p * std::log2(p);
  }
  return h < 0.0 ? 0.0 : h;
}

double Entropy(const ClassDistribution& d) { return Entropy(d.probs()); }

}  // namespace informed
