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

#ifndef INFORMED_REPORT_H_
#define INFORMED_REPORT_H_

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "informed/metrics.h"

namespace informed {

enum class OutputFormat { kTable, kCsv, kJson };
enum class Scale { kUnit, kPercent };

// "table", "csv" or "json".
OutputFormat ParseOutputFormat(std::string_view name);

inline double ScaleFactor(Scale scale) {
  return scale == Scale::kPercent ? 100.0 : 1.0;
}

struct NamedReport {
  std::string name;
  MetricReport report;
};

inline constexpr int kReportSchemaVersion = 1;

// "name (count) [entropy]" with entropy in bits to two decimals.
std::string SliceLabel(std::string_view name, const MetricReport& report);

// Metric values and per-class vectors are multiplied by the scale factor;
// counts and entropies are not.
void RenderReports(std::span<const NamedReport> reports, OutputFormat format,
                   Scale scale, std::ostream& out);

struct ParsedReports {
  Scale scale = Scale::kUnit;
  std::vector<NamedReport> reports;
};

// Inverse of the JSON rendering; values are returned on the unit scale.
ParsedReports ReadJsonReports(std::istream& in);

}  // namespace informed

#endif  // INFORMED_REPORT_H_
