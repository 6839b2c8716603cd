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

#ifndef INFORMED_LABEL_SPACE_H_
#define INFORMED_LABEL_SPACE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace informed {

using ClassIndex = std::size_t;

// Ordered, finite set of class identifiers. Identifiers are opaque strings
// compared byte-exactly.
class LabelSpace {
 public:
  // Throws EvalError on an empty list or duplicate identifiers.
  explicit LabelSpace(std::vector<std::string> labels);

  // Distinct identifiers of `sequence` in first-seen order.
  static LabelSpace FirstSeen(const std::vector<std::string>& sequence);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(ClassIndex index) const { return labels_.at(index); }

  bool contains(std::string_view label) const;
  std::optional<ClassIndex> find(std::string_view label) const;
  // Throws EvalError("unknown label: <label>").
  ClassIndex index_of(std::string_view label) const;

  bool operator==(const LabelSpace& other) const {
    return labels_ == other.labels_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ClassIndex> index_;
};

struct LabelPair {
  ClassIndex gold = 0;
  ClassIndex pred = 0;
};

// Ordered (gold, predicted) pairs over a shared label space.
class ClassificationSet {
 public:
  explicit ClassificationSet(LabelSpace space) : space_(std::move(space)) {}

  // Infers the label space in first-seen order (gold before pred on each
  // pair). Throws on length mismatch.
  static ClassificationSet FromLabels(const std::vector<std::string>& gold,
                                      const std::vector<std::string>& pred);
  static ClassificationSet FromLabels(const std::vector<std::string>& gold,
                                      const std::vector<std::string>& pred,
                                      LabelSpace space);

  // Throws EvalError("unknown label: ...") when either label is outside the
  // space.
  void Add(std::string_view gold, std::string_view pred);
  void Add(ClassIndex gold, ClassIndex pred);

  const LabelSpace& space() const { return space_; }
  const std::vector<LabelPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  const std::string& gold_label(std::size_t i) const {
    return space_.label(pairs_[i].gold);
  }
  const std::string& pred_label(std::size_t i) const {
    return space_.label(pairs_[i].pred);
  }

  void reserve(std::size_t n) { pairs_.reserve(n); }

 private:
  LabelSpace space_;
  std::vector<LabelPair> pairs_;
};

}  // namespace informed

#endif  // INFORMED_LABEL_SPACE_H_
