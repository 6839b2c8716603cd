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

#ifndef INFORMED_CONFUSION_MATRIX_H_
#define INFORMED_CONFUSION_MATRIX_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "informed/label_space.h"

namespace informed {

using Count = std::int64_t;

// One-vs-rest cells for a class of interest.
struct ContingencyCells {
  Count tp = 0;
  Count fp = 0;
  Count fn = 0;
  Count tn = 0;

  Count total() const { return tp + fp + fn + tn; }
  bool operator==(const ContingencyCells&) const = default;
};

// C x C count grid. Rows index the predicted class and columns the true
// class: cell(pred, gold).
class ConfusionMatrix {
 public:
  // Zero matrix over `space`.
  explicit ConfusionMatrix(LabelSpace space);

  // `rows[pred][gold]`. Throws EvalError on a shape mismatch or a negative
  // cell.
  ConfusionMatrix(LabelSpace space, const std::vector<std::vector<Count>>& rows);

  const LabelSpace& space() const { return space_; }
  std::size_t num_classes() const { return space_.size(); }
  Count n() const { return n_; }

  Count cell(ClassIndex pred, ClassIndex gold) const {
    return counts_[pred * space_.size() + gold];
  }
  void Increment(ClassIndex pred, ClassIndex gold, Count by = 1);

  Count trace() const;
  // Column sums (samples per true class).
  std::vector<Count> gold_counts() const;
  // Row sums (samples per predicted class).
  std::vector<Count> pred_counts() const;
  // Number of classes with at least one gold sample.
  std::size_t num_gold_classes() const;

  std::vector<std::vector<Count>> rows() const;

  bool operator==(const ConfusionMatrix& other) const {
    return space_ == other.space_ && counts_ == other.counts_;
  }

 private:
  LabelSpace space_;
  std::vector<Count> counts_;
  Count n_ = 0;
};

// Throws EvalError("empty classification set") on empty input.
ConfusionMatrix BuildConfusionMatrix(const ClassificationSet& set);

ContingencyCells PerClassContingency(const ConfusionMatrix& cm, ClassIndex c);
// Throws EvalError("unknown label: ...").
ContingencyCells PerClassContingency(const ConfusionMatrix& cm,
                                     std::string_view label);

}  // namespace informed

#endif  // INFORMED_CONFUSION_MATRIX_H_
