/*
 * Copyright 2026 The lsa-coord Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsa/channel/scenario.hpp"
#include "lsa/rate/lemmas.hpp"
#include "lsa/sim/montecarlo.hpp"

namespace lsa::sim {

enum class SweepAxis { kSnrDb, kTau1 };
enum class SchemeKind { kCoordinated, kInterferenceTemperature, kBenchmark };

std::string_view to_string(SweepAxis a);
std::string_view to_string(SchemeKind s);
SweepAxis parse_axis(std::string_view text);
SchemeKind parse_scheme(std::string_view text);

struct SweepSpec {
  SweepAxis axis = SweepAxis::kSnrDb;
  std::vector<double> points;
  channel::ScenarioConfig base;
  std::vector<SchemeKind> schemes{SchemeKind::kCoordinated, SchemeKind::kInterferenceTemperature,
                                  SchemeKind::kBenchmark};
  unsigned workers = 0;
  rate::EigenvaluePolicy policy = rate::EigenvaluePolicy::kStrict;

  /// Throws ValidationError: empty or non-increasing points, empty or
  /// repeated schemes, invalid base config.
  void validate() const;
};

std::vector<double> default_points(SweepAxis axis);

/// One CSV row. Coordinated points carry all 8 strategies; baselines one
/// row each.
struct ReportRow {
  double axis_value = 0.0;
  SchemeKind scheme = SchemeKind::kCoordinated;
  std::string strategy;
  std::string kind1;
  std::string kind2;
  std::string policy;
  double p1 = 0.0;
  double p2 = 0.0;
  double bound_rx1 = 0.0;
  double bound_rx2 = 0.0;
  McRates mc;
  bool feasible = false;
  bool selected = false;
};

struct PointReport {
  double axis_value = 0.0;
  bool feasible = false;  // scenario gate
  std::vector<ReportRow> rows;

  /// Selected coordinated row or the (single) baseline row; nullptr when
  /// absent or infeasible.
  const ReportRow* find(SchemeKind s) const;
};

struct SweepTable {
  SweepAxis axis = SweepAxis::kSnrDb;
  std::vector<PointReport> points;

  bool any_feasible() const;
  std::size_t row_count() const;
};

channel::ScenarioConfig apply_axis(const channel::ScenarioConfig& base, SweepAxis axis, double value);

/// Full pipeline at one axis value. All schemes share the channel draws of
/// stream 0 under base.seed, so every point (and every scheme) sees the
/// same realizations.
PointReport run_point(const SweepSpec& spec, double value);
SweepTable run_sweep(const SweepSpec& spec);

inline constexpr std::string_view kCsvHeader =
    "axis_value,scheme,strategy,kind1,kind2,policy,p1,p2,bound_rx1,bound_rx2,mc_rx1,mc_se_rx1,mc_rx2,mc_se_rx2,"
    "feasible,selected";

void write_csv(const SweepTable& table, std::ostream& os);
std::string to_csv(const SweepTable& table);

struct OutputPaths {
  std::string csv;
  std::optional<std::string> plot_dir;
};

/// Writes the CSV and, when plot_dir is set, one SVG per receiver
/// (incumbent_vs_<axis>.svg, licensee_vs_<axis>.svg). Throws
/// ValidationError on an empty table and IoError on unwritable paths.
void emit_outputs(const SweepTable& table, const OutputPaths& paths);

}  // namespace lsa::sim
