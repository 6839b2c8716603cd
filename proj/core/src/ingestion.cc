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

#include "informed/ingestion.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>
#include <unordered_set>

#include "informed/error.h"
#include "informed/random.h"
#include "json.hpp"

namespace informed {
namespace {

using Json = nlohmann::json;

std::string Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
           c == '\v';
  };
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  return std::string(s.substr(b, e - b));
}

std::string AtLine(std::size_t line) {
  return " at line " + std::to_string(line);
}

// Splits one delimited line; double quotes enclose fields and "" escapes a
// quote. Returns nullopt on an unterminated quote.
std::optional<std::vector<std::string>> SplitDelimited(std::string_view line,
                                                       char delim) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == delim) {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) return std::nullopt;
  fields.push_back(std::move(field));
  return fields;
}

bool IsBlank(std::string_view line) { return Trim(line).empty(); }

void StripBom(std::string& line) {
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) {
    line.erase(0, 3);
  }
}

// One data row: field values by column name.
struct Row {
  std::size_t line = 0;
  std::map<std::string, std::string, std::less<>> fields;
};

std::string JsonScalarToString(const Json& value, std::string_view key,
                               std::size_t line) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number() || value.is_boolean()) return value.dump();
  throw EvalError("malformed row" + AtLine(line) + ": field '" +
                  std::string(key) + "' is not a scalar");
}

std::vector<Row> ReadRows(std::istream& in, InputFormat format) {
  std::vector<Row> rows;
  std::string line;
  std::size_t line_no = 0;
  if (format == InputFormat::kJsonl) {
    while (std::getline(in, line)) {
      ++line_no;
      if (line_no == 1) StripBom(line);
      if (IsBlank(line)) continue;
      Json object;
      try {
        object = Json::parse(line);
      } catch (const Json::parse_error&) {
        throw EvalError("malformed row" + AtLine(line_no) + ": invalid JSON");
      }
      if (!object.is_object()) {
        throw EvalError("malformed row" + AtLine(line_no) +
                        ": expected a JSON object");
      }
      Row row;
      row.line = line_no;
      for (auto it = object.begin(); it != object.end(); ++it) {
        if (it.value().is_null()) continue;
        if (it.value().is_object() || it.value().is_array()) continue;
        row.fields.emplace(it.key(), JsonScalarToString(it.value(), it.key(), line_no));
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  const char delim = format == InputFormat::kTsv ? '\t' : ',';
  std::vector<std::string> header;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1) StripBom(line);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (IsBlank(line)) continue;
    auto fields = SplitDelimited(line, delim);
    if (!fields) {
      throw EvalError("malformed row" + AtLine(line_no) + ": unterminated quote");
    }
    if (header.empty()) {
      for (auto& f : *fields) header.push_back(Trim(f));
      continue;
    }
    if (fields->size() != header.size()) {
      throw EvalError("malformed row" + AtLine(line_no) + ": expected " +
                      std::to_string(header.size()) + " fields, found " +
                      std::to_string(fields->size()));
    }
    Row row;
    row.line = line_no;
    for (std::size_t i = 0; i < header.size(); ++i) {
      row.fields.emplace(header[i], std::move((*fields)[i]));
    }
    rows.push_back(std::move(row));
  }
  if (header.empty()) throw EvalError("schema error: missing header row");
  return rows;
}

const std::string* Field(const Row& row, std::string_view name) {
  auto it = row.fields.find(name);
  return it == row.fields.end() ? nullptr : &it->second;
}

std::string RequiredLabel(const Row& row, std::string_view column) {
  const std::string* value = Field(row, column);
  if (value == nullptr) {
    throw EvalError("schema error: missing column '" + std::string(column) +
                    "'" + AtLine(row.line));
  }
  std::string label = Trim(*value);
  if (label.empty()) {
    throw EvalError("malformed row" + AtLine(row.line) + ": empty '" +
                    std::string(column) + "' label");
  }
  return label;
}

std::optional<std::string> OptionalGroup(const Row& row, std::string_view column) {
  const std::string* value = Field(row, column);
  if (value == nullptr) return std::nullopt;
  return Trim(*value);
}

double ParseNumber(std::string_view text, std::size_t line) {
  const std::string trimmed = Trim(text);
  double value = 0.0;
  const char* begin = trimmed.data();
  const char* end = begin + trimmed.size();
  if (!trimmed.empty() && *begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || trimmed.empty()) {
    throw EvalError("malformed row" + AtLine(line) + ": '" + trimmed +
                    "' is not a number");
  }
  return value;
}

std::string DiscretizeOne(double value, double lo, double hi, std::size_t line,
                          Warnings* warnings) {
  const double values[] = {value};
  try {
    return DiscretizeScores(values, lo, hi, warnings).front();
  } catch (const EvalError& e) {
    throw EvalError(std::string(e.what()) + AtLine(line));
  }
}

}  // namespace

InputFormat ParseInputFormat(std::string_view name) {
  if (name == "csv") return InputFormat::kCsv;
  if (name == "tsv") return InputFormat::kTsv;
  if (name == "jsonl") return InputFormat::kJsonl;
  throw EvalError("unknown format: " + std::string(name));
}

InputFormat InferInputFormat(std::string_view path) {
  const auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".jsonl") || ends_with(".ndjson")) return InputFormat::kJsonl;
  if (ends_with(".tsv") || ends_with(".tab")) return InputFormat::kTsv;
  return InputFormat::kCsv;
}

GroupedDataset::GroupedDataset(std::vector<PredictionRecord> records,
                               LabelSpace space, bool explicit_space)
    : records_(std::move(records)),
      space_(std::move(space)),
      explicit_space_(explicit_space) {
  std::unordered_set<std::string> seen;
  for (const auto& r : records_) {
    const std::string key = r.group.value_or("");
    if (seen.insert(key).second) group_keys_.push_back(key);
  }
}

bool GroupedDataset::has_groups() const {
  return std::any_of(records_.begin(), records_.end(),
                     [](const PredictionRecord& r) { return r.group.has_value(); });
}

std::size_t GroupedDataset::group_size(std::string_view key) const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [&](const auto& r) {
        return r.group.value_or("") == key;
      }));
}

ClassificationSet GroupedDataset::Overall() const {
  ClassificationSet set(space_);
  set.reserve(records_.size());
  for (const auto& r : records_) set.Add(r.gold, r.pred);
  return set;
}

ClassificationSet GroupedDataset::Group(std::string_view key,
                                        bool shared_space) const {
  std::vector<std::string> gold;
  std::vector<std::string> pred;
  for (const auto& r : records_) {
    if (r.group.value_or("") != key) continue;
    gold.push_back(r.gold);
    pred.push_back(r.pred);
  }
  if (gold.empty()) throw EvalError("unknown group: " + std::string(key));
  if (shared_space || explicit_space_) {
    return ClassificationSet::FromLabels(gold, pred, space_);
  }
  return ClassificationSet::FromLabels(gold, pred);
}

GroupedDataset ParsePredictions(std::istream& in, const ParseOptions& options,
                                Warnings* warnings) {
  if (options.policy == LabelPolicy::kStrict && !options.labels) {
    throw EvalError("strict label policy requires an explicit label list");
  }
  const auto rows = ReadRows(in, options.format);
  std::vector<PredictionRecord> records;
  records.reserve(rows.size());
  for (const Row& row : rows) {
    PredictionRecord record;
    record.line = row.line;
    record.gold = RequiredLabel(row, options.schema.gold);
    record.pred = RequiredLabel(row, options.schema.pred);
    record.group = OptionalGroup(row, options.schema.group);
    if (options.discretize) {
      const auto [lo, hi] = *options.discretize;
      record.gold = DiscretizeOne(ParseNumber(record.gold, row.line), lo, hi,
                                  row.line, warnings);
      record.pred = DiscretizeOne(ParseNumber(record.pred, row.line), lo, hi,
                                  row.line, warnings);
    }
    records.push_back(std::move(record));
  }
  if (records.empty()) throw EvalError("empty classification set");

  if (options.policy == LabelPolicy::kStrict) {
    for (const auto& r : records) {
      for (const std::string* label : {&r.gold, &r.pred}) {
        if (!options.labels->contains(*label)) {
          throw EvalError("unknown label at line " + std::to_string(r.line) +
                          ": " + *label);
        }
      }
    }
    return GroupedDataset(std::move(records), *options.labels, true);
  }

  std::vector<std::string> labels =
      options.labels ? options.labels->labels() : std::vector<std::string>{};
  std::unordered_set<std::string> known(labels.begin(), labels.end());
  std::unordered_set<std::string> gold_labels;
  for (const auto& r : records) {
    gold_labels.insert(r.gold);
    for (const std::string* label : {&r.gold, &r.pred}) {
      if (known.insert(*label).second) labels.push_back(*label);
    }
  }
  std::string pred_only;
  for (const auto& label : labels) {
    if (gold_labels.count(label)) continue;
    if (options.labels && options.labels->contains(label)) continue;
    if (!pred_only.empty()) pred_only += ",";
    pred_only += label;
  }
  if (!pred_only.empty() && warnings != nullptr) {
    warnings->push_back("labels present only in predictions: " + pred_only);
  }
  const bool explicit_space = options.labels.has_value();
  return GroupedDataset(std::move(records), LabelSpace(std::move(labels)),
                        explicit_space);
}

std::vector<GoldRecord> ReadGoldLabels(std::istream& in, InputFormat format,
                                       const Schema& schema) {
  std::vector<GoldRecord> out;
  for (const Row& row : ReadRows(in, format)) {
    out.push_back({RequiredLabel(row, schema.gold), OptionalGroup(row, schema.group)});
  }
  if (out.empty()) throw EvalError("empty classification set");
  return out;
}

std::vector<std::string> DiscretizeScores(std::span<const double> values,
                                          double lo, double hi,
                                          Warnings* warnings) {
  if (!(lo < hi)) throw EvalError("discretize: lo must be below hi");
  const double min_class = std::ceil(lo);
  const double max_class = std::floor(hi);
  if (min_class > max_class) throw EvalError("discretize: no integer in range");
  std::vector<std::string> out;
  out.reserve(values.size());
  for (double v : values) {
    if (std::isnan(v)) throw EvalError("discretize: NaN score");
    if (v < lo - 0.5 || v > hi + 0.5) {
      if (warnings != nullptr) {
        std::ostringstream msg;
        msg << "discretize: score " << v << " outside [" << lo << ", " << hi
            << "] clamped";
        warnings->push_back(msg.str());
      }
    }
    const double rounded = std::clamp(std::round(v), min_class, max_class);
    out.push_back(std::to_string(static_cast<long long>(rounded)));
  }
  return out;
}

BaselineMode ParseBaselineMode(std::string_view name) {
  if (name == "most-common") return BaselineMode::kMostCommon;
  if (name == "prevalence-sample") return BaselineMode::kPrevalenceSample;
  throw EvalError("unknown baseline mode: " + std::string(name));
}

ClassificationSet MakeBaseline(BaselineMode mode, const ClassDistribution& train,
                               const std::vector<std::string>& gold,
                               std::uint64_t seed) {
  if (gold.empty()) throw EvalError("empty classification set");
  std::vector<std::string> labels;
  std::unordered_set<std::string> known;
  for (const auto& g : gold) {
    if (known.insert(g).second) labels.push_back(g);
  }
  for (const auto& t : train.space().labels()) {
    if (known.insert(t).second) labels.push_back(t);
  }
  ClassificationSet set{LabelSpace(std::move(labels))};
  set.reserve(gold.size());

  const auto& probs = train.probs();
  if (mode == BaselineMode::kMostCommon) {
    const auto best = static_cast<ClassIndex>(
        std::max_element(probs.begin(), probs.end()) - probs.begin());
    const ClassIndex pred = set.space().index_of(train.space().label(best));
    for (const auto& g : gold) set.Add(set.space().index_of(g), pred);
    return set;
  }

  std::vector<ClassIndex> to_set(train.size());
  for (ClassIndex c = 0; c < train.size(); ++c) {
    to_set[c] = set.space().index_of(train.space().label(c));
  }
  const CategoricalSampler sampler(probs);
  Rng rng(DeriveSeed(seed, 0, 0));
  for (const auto& g : gold) set.Add(set.space().index_of(g), to_set[sampler(rng)]);
  return set;
}

ClassDistribution LoadDistribution(std::istream& in) {
  std::vector<std::string> labels;
  std::vector<double> values;
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  const std::string trimmed = Trim(text);
  if (!trimmed.empty() && trimmed.front() == '{') {
    Json object;
    try {
      object = Json::parse(trimmed);
    } catch (const Json::parse_error&) {
      throw EvalError("malformed distribution: invalid JSON");
    }
    for (auto it = object.begin(); it != object.end(); ++it) {
      if (!it.value().is_number()) {
        throw EvalError("malformed distribution: value for '" + it.key() +
                        "' is not a number");
      }
      labels.push_back(Trim(it.key()));
      values.push_back(it.value().get<double>());
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      if (line_no == 1) StripBom(line);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (IsBlank(line)) continue;
      auto fields = SplitDelimited(line, ',');
      if (!fields || fields->size() != 2) {
        throw EvalError("malformed distribution" + AtLine(line_no) +
                        ": expected label,value");
      }
      double value = 0.0;
      try {
        value = ParseNumber((*fields)[1], line_no);
      } catch (const EvalError&) {
        if (labels.empty() && values.empty()) continue;  // header
        throw;
      }
      labels.push_back(Trim((*fields)[0]));
      values.push_back(value);
    }
  }
  if (labels.empty()) throw EvalError("empty distribution");

  double total = 0.0;
  bool whole = true;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]) || values[i] < 0.0) {
      throw EvalError("negative entry for label " + labels[i]);
    }
    total += values[i];
    whole = whole && values[i] == std::floor(values[i]);
  }
  LabelSpace space(std::move(labels));
  if (std::abs(total - 1.0) <= 1e-6) {
    for (double& v : values) v /= total;
    return ClassDistribution(std::move(space), std::move(values));
  }
  if (!whole || total == 0.0) throw EvalError("not a distribution");
  for (double& v : values) v /= total;
  return ClassDistribution(std::move(space), std::move(values));
}

}  // namespace informed
