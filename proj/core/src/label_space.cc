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

#include "informed/label_space.h"

#include "informed/error.h"

namespace informed {

LabelSpace::LabelSpace(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw EvalError("empty label space");
  index_.reserve(labels_.size());
  for (ClassIndex i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) {
      throw EvalError("duplicate label: " + labels_[i]);
    }
  }
}

LabelSpace LabelSpace::FirstSeen(const std::vector<std::string>& sequence) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, bool> seen;
  for (const auto& label : sequence) {
    if (seen.emplace(label, true).second) labels.push_back(label);
  }
  return LabelSpace(std::move(labels));
}

bool LabelSpace::contains(std::string_view label) const {
  return index_.count(std::string(label)) > 0;
}

std::optional<ClassIndex> LabelSpace::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ClassIndex LabelSpace::index_of(std::string_view label) const {
  auto found = find(label);
  if (!found) throw EvalError("unknown label: " + std::string(label));
  return *found;
}

ClassificationSet ClassificationSet::FromLabels(
    const std::vector<std::string>& gold, const std::vector<std::string>& pred) {
  if (gold.size() != pred.size()) {
    throw EvalError("length mismatch: " + std::to_string(gold.size()) +
                    " gold vs " + std::to_string(pred.size()) + " predicted");
  }
  std::vector<std::string> interleaved;
  interleaved.reserve(2 * gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    interleaved.push_back(gold[i]);
    interleaved.push_back(pred[i]);
  }
  if (interleaved.empty()) throw EvalError("empty classification set");
  return FromLabels(gold, pred, LabelSpace::FirstSeen(interleaved));
}

ClassificationSet ClassificationSet::FromLabels(
    const std::vector<std::string>& gold, const std::vector<std::string>& pred,
    LabelSpace space) {
  if (gold.size() != pred.size()) {
    throw EvalError("length mismatch: " + std::to_string(gold.size()) +
                    " gold vs " + std::to_string(pred.size()) + " predicted");
  }
  ClassificationSet set(std::move(space));
  set.reserve(gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) set.Add(gold[i], pred[i]);
  return set;
}

void ClassificationSet::Add(std::string_view gold, std::string_view pred) {
  pairs_.push_back({space_.index_of(gold), space_.index_of(pred)});
}

void ClassificationSet::Add(ClassIndex gold, ClassIndex pred) {
  if (gold >= space_.size() || pred >= space_.size()) {
    throw EvalError("unknown label: index out of range");
  }
  pairs_.push_back({gold, pred});
}

}  // namespace informed
