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

#include "informed/report.h"

#include <algorithm>
#include <cstdio>

#include "informed/error.h"
#include "json.hpp"

namespace informed {
namespace {

using OrderedJson = nlohmann::ordered_json;

std::string Fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Metric columns shared by every report, in first-report order.
std::vector<std::string> MetricColumns(std::span<const NamedReport> reports) {
  std::vector<std::string> columns;
  if (reports.empty()) return columns;
  for (const auto& [name, unused] : reports.front().report.values) {
    const bool everywhere =
        std::all_of(reports.begin(), reports.end(),
                    [&](const NamedReport& r) { return r.report.has(name); });
    if (everywhere) columns.push_back(name);
  }
  return columns;
}

void RenderTable(std::span<const NamedReport> reports, Scale scale,
                 std::ostream& out) {
  const auto columns = MetricColumns(reports);
  const int decimals = scale == Scale::kPercent ? 1 : 4;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header = {"slice"};
  header.insert(header.end(), columns.begin(), columns.end());
  cells.push_back(header);
  for (const auto& r : reports) {
    std::vector<std::string> row = {SliceLabel(r.name, r.report)};
    for (const auto& m : columns) {
      row.push_back(Fixed(r.report.value(m) * ScaleFactor(scale), decimals));
    }
    cells.push_back(std::move(row));
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], row[i].size());
    }
  }
  for (std::size_t r = 0; r < cells.size(); ++r) {
    const auto& row = cells[r];
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << "  ";
      if (i == 0) {
        out << row[i] << std::string(width[i] - row[i].size(), ' ');
      } else {
        out << std::string(width[i] - row[i].size(), ' ') << row[i];
      }
    }
    out << '\n';
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t w : width) total += w;
      out << std::string(total + 2 * (width.size() - 1), '-') << '\n';
    }
  }
}

void RenderCsv(std::span<const NamedReport> reports, Scale scale,
               std::ostream& out) {
  const auto columns = MetricColumns(reports);
  out << "slice,n,c_eff,entropy_gold";
  for (const auto& m : columns) out << ',' << m;
  out << '\n';
  for (const auto& r : reports) {
    out << CsvField(r.name) << ',' << r.report.n << ',' << r.report.c_eff << ','
        << OrderedJson(r.report.entropy_gold).dump();
    for (const auto& m : columns) {
      out << ',' << OrderedJson(r.report.value(m) * ScaleFactor(scale)).dump();
    }
    out << '\n';
  }
}

OrderedJson ReportToJson(const NamedReport& named, double factor) {
  const MetricReport& r = named.report;
  OrderedJson j;
  j["name"] = named.name;
  j["version"] = kReportSchemaVersion;
  j["n"] = r.n;
  j["c_eff"] = r.c_eff;
  j["entropy_gold"] = r.entropy_gold;
  j["labels"] = r.labels;
  OrderedJson metrics = OrderedJson::object();
  for (const auto& [name, v] : r.values) metrics[name] = v * factor;
  j["metrics"] = std::move(metrics);
  OrderedJson per_class = OrderedJson::object();
  for (const auto& [name, values] : r.per_class) {
    OrderedJson arr = OrderedJson::array();
    for (double v : values) arr.push_back(v * factor);
    per_class[name] = std::move(arr);
  }
  j["per_class"] = std::move(per_class);
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace

OutputFormat ParseOutputFormat(std::string_view name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "csv") return OutputFormat::kCsv;
  if (name == "json") return OutputFormat::kJson;
  throw EvalError("unknown output format: " + std::string(name));
}

std::string SliceLabel(std::string_view name, const MetricReport& report) {
  return std::string(name) + " (" + std::to_string(report.n) + ") [" +
         Fixed(report.entropy_gold, 2) + "]";
}

void RenderReports(std::span<const NamedReport> reports, OutputFormat format,
                   Scale scale, std::ostream& out) {
  switch (format) {
    case OutputFormat::kTable:
      RenderTable(reports, scale, out);
      return;
    case OutputFormat::kCsv:
      RenderCsv(reports, scale, out);
      return;
    case OutputFormat::kJson: {
      OrderedJson doc;
      doc["version"] = kReportSchemaVersion;
      doc["scale"] = scale == Scale::kPercent ? "percent" : "unit";
      OrderedJson list = OrderedJson::array();
      for (const auto& r : reports) {
        list.push_back(ReportToJson(r, ScaleFactor(scale)));
      }
      doc["reports"] = std::move(list);
      out << doc.dump(2) << '\n';
      return;
    }
  }
}

ParsedReports ReadJsonReports(std::istream& in) {
  OrderedJson doc;
  try {
    doc = OrderedJson::parse(in);
  } catch (const OrderedJson::exception& e) {
    throw EvalError(std::string("malformed report: ") + e.what());
  }
  try {
    if (doc.at("version").get<int>() != kReportSchemaVersion) {
      throw EvalError("unsupported report version");
    }
    ParsedReports parsed;
    parsed.scale =
        doc.at("scale").get<std::string>() == "percent" ? Scale::kPercent
                                                        : Scale::kUnit;
    const double factor = ScaleFactor(parsed.scale);
    for (const auto& j : doc.at("reports")) {
      NamedReport named;
      named.name = j.at("name").get<std::string>();
      MetricReport& r = named.report;
      r.n = j.at("n").get<Count>();
      r.c_eff = j.at("c_eff").get<std::size_t>();
      r.entropy_gold = j.at("entropy_gold").get<double>();
      r.labels = j.at("labels").get<std::vector<std::string>>();
      for (const auto& [name, v] : j.at("metrics").items()) {
        r.values.emplace_back(name, v.get<double>() / factor);
      }
      for (const auto& [name, arr] : j.at("per_class").items()) {
        std::vector<double> values;
        for (const auto& v : arr) values.push_back(v.get<double>() / factor);
        r.per_class.emplace_back(name, std::move(values));
      }
      r.warnings = j.at("warnings").get<std::vector<std::string>>();
      parsed.reports.push_back(std::move(named));
    }
    return parsed;
  } catch (const OrderedJson::exception& e) {
    throw EvalError(std::string("malformed report: ") + e.what());
  }
}

}  // namespace informed
