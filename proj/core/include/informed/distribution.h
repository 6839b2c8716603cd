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

#ifndef INFORMED_DISTRIBUTION_H_
#define INFORMED_DISTRIBUTION_H_

#include <span>
#include <string_view>
#include <vector>

#include "informed/confusion_matrix.h"
#include "informed/label_space.h"

namespace informed {

// Probability vector over a label space. Entries lie in [0, 1] and sum to 1
// within kSimplexTolerance.
class ClassDistribution {
 public:
  static constexpr double kSimplexTolerance = 1e-9;

  ClassDistribution(LabelSpace space, std::vector<double> probs);

  // Normalizes non-negative counts. Throws when the total is zero.
  static ClassDistribution FromCounts(LabelSpace space,
                                      std::span<const Count> counts);
  static ClassDistribution Uniform(LabelSpace space);

  const LabelSpace& space() const { return space_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return probs_.size(); }
  double operator[](ClassIndex c) const { return probs_[c]; }
  // Zero for labels outside the space.
  double prob(std::string_view label) const;

 private:
  LabelSpace space_;
  std::vector<double> probs_;
};

// Fraction of samples per true class. Throws EvalError("empty matrix").
ClassDistribution Prevalence(const ConfusionMatrix& cm);
// Fraction of samples per predicted class. Throws EvalError("empty matrix").
ClassDistribution Bias(const ConfusionMatrix& cm);

// Shannon entropy in bits, with 0 log 0 = 0.
double Entropy(const ClassDistribution& d);
double Entropy(std::span<const double> probs);

}  // namespace informed

#endif  // INFORMED_DISTRIBUTION_H_
