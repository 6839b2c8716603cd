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

#include "informed/confusion_matrix.h"

#include <numeric>

#include "informed/error.h"

namespace informed {

ConfusionMatrix::ConfusionMatrix(LabelSpace space)
    : space_(std::move(space)), counts_(space_.size() * space_.size(), 0) {}

ConfusionMatrix::ConfusionMatrix(LabelSpace space,
                                 const std::vector<std::vector<Count>>& rows)
    : ConfusionMatrix(std::move(space)) {
  const std::size_t c = space_.size();
  if (rows.size() != c) throw EvalError("confusion matrix shape mismatch");
  for (std::size_t pred = 0; pred < c; ++pred) {
    if (rows[pred].size() != c) {
      throw EvalError("confusion matrix shape mismatch");
    }
    for (std::size_t gold = 0; gold < c; ++gold) {
      if (rows[pred][gold] < 0) throw EvalError("negative confusion count");
      counts_[pred * c + gold] = rows[pred][gold];
      n_ += rows[pred][gold];
    }
  }
}

void ConfusionMatrix::Increment(ClassIndex pred, ClassIndex gold, Count by) {
  const std::size_t c = space_.size();
  if (pred >= c || gold >= c) throw EvalError("unknown label: index out of range");
  Count& cell = counts_[pred * c + gold];
  if (cell + by < 0) throw EvalError("negative confusion count");
  cell += by;
  n_ += by;
}

Count ConfusionMatrix::trace() const {
  Count t = 0;
  for (std::size_t k = 0; k < space_.size(); ++k) t += cell(k, k);
  return t;
}

std::vector<Count> ConfusionMatrix::gold_counts() const {
  const std::size_t c = space_.size();
  std::vector<Count> out(c, 0);
  for (std::size_t pred = 0; pred < c; ++pred) {
    for (std::size_t gold = 0; gold < c; ++gold) out[gold] += cell(pred, gold);
  }
  return out;
}

std::vector<Count> ConfusionMatrix::pred_counts() const {
  const std::size_t c = space_.size();
  std::vector<Count> out(c, 0);
  for (std::size_t pred = 0; pred < c; ++pred) {
    for (std::size_t gold = 0; gold < c; ++gold) out[pred] += cell(pred, gold);
  }
  return out;
}

std::size_t ConfusionMatrix::num_gold_classes() const {
  std::size_t k = 0;
  for (Count g : gold_counts()) k += g > 0 ? 1 : 0;
  return k;
}

std::vector<std::vector<Count>> ConfusionMatrix::rows() const {
  const std::size_t c = space_.size();
  std::vector<std::vector<Count>> out(c, std::vector<Count>(c));
  for (std::size_t pred = 0; pred < c; ++pred) {
    for (std::size_t gold = 0; gold < c; ++gold) out[pred][gold] = cell(pred, gold);
  }
  return out;
}

ConfusionMatrix BuildConfusionMatrix(const ClassificationSet& set) {
  if (set.empty()) throw EvalError("empty classification set");
  ConfusionMatrix cm(set.space());
  for (const LabelPair& p : set.pairs()) cm.Increment(p.pred, p.gold);
  return cm;
}

ContingencyCells PerClassContingency(const ConfusionMatrix& cm, ClassIndex c) {
  if (c >= cm.num_classes()) throw EvalError("unknown label: index out of range");
  ContingencyCells cells;
  cells.tp = cm.cell(c, c);
  Count row = 0;
  Count col = 0;
  for (std::size_t k = 0; k < cm.num_classes(); ++k) {
    row += cm.cell(c, k);
    col += cm.cell(k, c);
  }
  cells.fp = row - cells.tp;
  cells.fn = col - cells.tp;
  cells.tn = cm.n() - cells.tp - cells.fp - cells.fn;
  return cells;
}

ContingencyCells PerClassContingency(const ConfusionMatrix& cm,
                                     std::string_view label) {
  return PerClassContingency(cm, cm.space().index_of(label));
}

}  // namespace informed
