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

#include "lsa/sim/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "lsa/baselines/baselines.hpp"
#include "lsa/coordination/beamformer.hpp"
#include "lsa/coordination/strategy.hpp"
#include "lsa/error.hpp"

namespace lsa::sim {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

McRates nan_rates() { return {{kNaN, kNaN}, {kNaN, kNaN}}; }

ReportRow infeasible_row(double value, SchemeKind scheme) {
  ReportRow r;
  r.axis_value = value;
  r.scheme = scheme;
  r.strategy = "-";
  r.kind1 = "-";
  r.kind2 = "-";
  r.policy = "-";
  r.p1 = r.p2 = r.bound_rx1 = r.bound_rx2 = kNaN;
  r.mc = nan_rates();
  return r;
}

ReportRow strategy_row(double value, const coord::Strategy& s, bool selected) {
  ReportRow r;
  r.axis_value = value;
  r.scheme = SchemeKind::kCoordinated;
  r.strategy = s.name();
  r.kind1 = std::string(rate::to_string(s.kind1));
  r.kind2 = std::string(rate::to_string(s.kind2));
  r.policy = std::string(coord::to_string(s.policy));
  r.p1 = s.p1;
  r.p2 = s.p2;
  r.bound_rx1 = s.incumbent_bound.value;
  r.bound_rx2 = s.licensee_bound.value;
  r.feasible = s.feasible;
  r.selected = selected;
  return r;
}

ReportRow baseline_row(double value, SchemeKind scheme, const baseline::BaselineResult& b,
                       const channel::ScenarioConfig& cfg) {
  ReportRow r;
  r.axis_value = value;
  r.scheme = scheme;
  const bool inttemp = scheme == SchemeKind::kInterferenceTemperature;
  r.kind1 = "MF";
  r.kind2 = inttemp ? "SZF" : "MF";
  r.policy = (inttemp || b.p1 >= cfg.p1_max) ? "P1" : "P2";
  r.strategy = fmt::format("{}-{}-{}", r.kind1, r.kind2, r.policy);
  r.p1 = b.p1;
  r.p2 = b.p2;
  r.bound_rx1 = b.incumbent_rate.value;
  r.bound_rx2 = b.licensee_rate.value;
  r.feasible = true;
  r.selected = true;
  return r;
}

}  // namespace

std::string_view to_string(SweepAxis a) { return a == SweepAxis::kSnrDb ? "snr" : "tau1"; }

std::string_view to_string(SchemeKind s) {
  switch (s) {
    case SchemeKind::kCoordinated:
      return "coordinated";
    case SchemeKind::kInterferenceTemperature:
      return "inttemp";
    case SchemeKind::kBenchmark:
      return "benchmark";
  }
  return "?";
}

SweepAxis parse_axis(std::string_view text) {
  if (text == "snr") return SweepAxis::kSnrDb;
  if (text == "tau1") return SweepAxis::kTau1;
  throw ValidationError(fmt::format("unknown sweep axis '{}'", text));
}

SchemeKind parse_scheme(std::string_view text) {
  for (SchemeKind s : {SchemeKind::kCoordinated, SchemeKind::kInterferenceTemperature, SchemeKind::kBenchmark}) {
    if (text == to_string(s)) return s;
  }
  throw ValidationError(fmt::format("unknown scheme '{}'", text));
}

void SweepSpec::validate() const {
  if (points.empty()) throw ValidationError("sweep: no points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!std::isfinite(points[i])) throw ValidationError("sweep: non-finite point");
    if (i > 0 && !(points[i] > points[i - 1])) throw ValidationError("sweep: points must be strictly increasing");
  }
  if (schemes.empty()) throw ValidationError("sweep: empty scheme list");
  for (std::size_t i = 0; i < schemes.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (schemes[i] == schemes[j]) throw ValidationError("sweep: repeated scheme");
    }
  }
  base.validate();
}

std::vector<double> default_points(SweepAxis axis) {
  std::vector<double> out;
  if (axis == SweepAxis::kSnrDb) {
    for (int k = 0; k <= 10; ++k) out.push_back(2.0 * k);
  } else {
    for (int k = 1; k <= 12; ++k) out.push_back(0.25 * k);
  }
  return out;
}

const ReportRow* PointReport::find(SchemeKind s) const {
  for (const auto& r : rows) {
    if (r.scheme == s && r.selected && r.feasible) return &r;
  }
  return nullptr;
}

bool SweepTable::any_feasible() const {
  return std::any_of(points.begin(), points.end(), [](const PointReport& p) { return p.feasible; });
}

std::size_t SweepTable::row_count() const {
  std::size_t n = 0;
  for (const auto& p : points) n += p.rows.size();
  return n;
}

channel::ScenarioConfig apply_axis(const channel::ScenarioConfig& base, SweepAxis axis, double value) {
  channel::ScenarioConfig cfg = base;
  if (axis == SweepAxis::kSnrDb) {
    cfg = channel::with_snr_db(cfg, value);
  } else {
    cfg.tau1 = value;
  }
  cfg.validate();
  return cfg;
}

PointReport run_point(const SweepSpec& spec, double value) {
  const channel::ScenarioConfig cfg = apply_axis(spec.base, spec.axis, value);
  const channel::CovarianceSet cov = channel::build_covariances(cfg);

  PointReport point;
  point.axis_value = value;
  point.feasible = coord::check_feasibility(cfg, cov, spec.policy);
  if (!point.feasible) {
    for (SchemeKind s : spec.schemes) point.rows.push_back(infeasible_row(value, s));
    return point;
  }

  const rate::SzfVectors szf = coord::szf_beamformers(cov);
  std::vector<SchemeSpec> schemes;
  for (SchemeKind s : spec.schemes) {
    if (s == SchemeKind::kCoordinated) {
      const coord::StrategyTable table = coord::select_strategy(cfg, cov, spec.policy);
      for (std::size_t i = 0; i < table.entries.size(); ++i) {
        point.rows.push_back(strategy_row(value, table.entries[i], i == table.selected));
        schemes.push_back(scheme_from_strategy(table.entries[i], table.szf));
      }
      continue;
    }
    try {
      const baseline::BaselineResult b = s == SchemeKind::kInterferenceTemperature
                                             ? baseline::interference_temperature_scheme(cfg, cov, spec.policy)
                                             : baseline::coordination_benchmark(cfg, cov, spec.policy);
      point.rows.push_back(baseline_row(value, s, b, cfg));
      schemes.push_back(scheme_from_baseline(b, szf));
    } catch (const InfeasibleError&) {
      point.rows.push_back(infeasible_row(value, s));
    }
  }

  McOptions opts;
  opts.seed = cfg.seed;
  opts.stream = 0;
  opts.n_samples = cfg.n_samples;
  opts.workers = spec.workers;
  const std::vector<McRates> rates = mc_ergodic_rates(schemes, cov, opts);
  std::size_t k = 0;
  for (auto& row : point.rows) {
    if (row.strategy == "-") continue;
    row.mc = rates[k++];
  }
  return point;
}

SweepTable run_sweep(const SweepSpec& spec) {
  spec.validate();
  SweepTable table;
  table.axis = spec.axis;
  for (double v : spec.points) table.points.push_back(run_point(spec, v));
  return table;
}

void write_csv(const SweepTable& table, std::ostream& os) {
  os << kCsvHeader << '\n';
  for (const auto& point : table.points) {
    for (const auto& r : point.rows) {
      fmt::print(os, "{:.12g},{},{},{},{},{},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{:.12g},{},{}\n",
                 r.axis_value, to_string(r.scheme), r.strategy, r.kind1, r.kind2, r.policy, r.p1, r.p2, r.bound_rx1,
                 r.bound_rx2, r.mc.mean[0], r.mc.std_error[0], r.mc.mean[1], r.mc.std_error[1], r.feasible ? 1 : 0,
                 r.selected ? 1 : 0);
    }
  }
}

std::string to_csv(const SweepTable& table) {
  std::ostringstream os;
  write_csv(table, os);
  return os.str();
}

namespace {

struct Series {
  std::string label;
  std::string color;
  std::vector<std::pair<double, double>> xy;
};

std::string svg_chart(const std::string& title, const std::string& x_label, const std::vector<Series>& series) {
  constexpr double kW = 640, kH = 420, kL = 60, kR = 150, kT = 40, kB = 50;
  double x0 = INFINITY, x1 = -INFINITY, y0 = 0.0, y1 = -INFINITY;
  for (const auto& s : series) {
    for (auto [x, y] : s.xy) {
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y1 = std::max(y1, y);
    }
  }
  if (!std::isfinite(x0)) x0 = 0.0, x1 = 1.0;
  if (x1 <= x0) x1 = x0 + 1.0;
  if (!(y1 > y0)) y1 = 1.0;
  y1 *= 1.05;
  auto px = [&](double x) { return kL + (x - x0) / (x1 - x0) * (kW - kL - kR); };
  auto py = [&](double y) { return kH - kB - (y - y0) / (y1 - y0) * (kH - kT - kB); };

  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" font-family=\"sans-serif\" "
      "font-size=\"12\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      kW, kH);
  out += fmt::format("<text x=\"{}\" y=\"20\" font-size=\"14\">{}</text>\n", kL, title);
  out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"black\"/>\n", kL, kH - kB, kW - kR);
  out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\" stroke=\"black\"/>\n", kL, kT, kH - kB);
  for (int t = 0; t <= 4; ++t) {
    const double xv = x0 + (x1 - x0) * t / 4.0;
    const double yv = y0 + (y1 - y0) * t / 4.0;
    out += fmt::format("<text x=\"{:.1f}\" y=\"{}\" text-anchor=\"middle\">{:.3g}</text>\n", px(xv), kH - kB + 16, xv);
    out += fmt::format("<text x=\"{}\" y=\"{:.1f}\" text-anchor=\"end\">{:.3g}</text>\n", kL - 6, py(yv) + 4, yv);
  }
  out += fmt::format("<text x=\"{:.1f}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", (kL + kW - kR) / 2, kH - 12,
                     x_label);
  out += fmt::format("<text x=\"14\" y=\"{:.1f}\" transform=\"rotate(-90 14 {:.1f})\" text-anchor=\"middle\">"
                     "ergodic rate [bits/s/Hz]</text>\n",
                     (kT + kH - kB) / 2, (kT + kH - kB) / 2);
  double legend_y = kT + 10;
  for (const auto& s : series) {
    std::string pts;
    for (auto [x, y] : s.xy) pts += fmt::format("{:.2f},{:.2f} ", px(x), py(y));
    out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"2\" points=\"{}\"/>\n", s.color, pts);
    out += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\" stroke-width=\"2\"/>\n",
                       kW - kR + 10, legend_y, kW - kR + 30, s.color);
    out += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", kW - kR + 36, legend_y + 4, s.label);
    legend_y += 18;
  }
  out += "</svg>\n";
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError(fmt::format("cannot open '{}' for writing", path.string()));
  f << content;
  f.flush();
  if (!f) throw IoError(fmt::format("write to '{}' failed", path.string()));
}

}  // namespace

void emit_outputs(const SweepTable& table, const OutputPaths& paths) {
  if (table.points.empty() || table.row_count() == 0) throw ValidationError("emit_outputs: empty table");
  write_file(paths.csv, to_csv(table));
  if (!paths.plot_dir) return;

  std::error_code ec;
  std::filesystem::create_directories(*paths.plot_dir, ec);
  if (ec) throw IoError(fmt::format("cannot create plot directory '{}': {}", *paths.plot_dir, ec.message()));
  const std::string axis(to_string(table.axis));
  const std::string x_label = table.axis == SweepAxis::kSnrDb ? "transmit SNR [dB]" : "incumbent rate target tau1";
  const std::pair<SchemeKind, const char*> styles[] = {{SchemeKind::kCoordinated, "#1f77b4"},
                                                       {SchemeKind::kInterferenceTemperature, "#d62728"},
                                                       {SchemeKind::kBenchmark, "#2ca02c"}};
  for (int rx : {kIncumbent, kLicensee}) {
    std::vector<Series> series;
    for (auto [scheme, color] : styles) {
      Series s{std::string(to_string(scheme)), color, {}};
      for (const auto& p : table.points) {
        if (const ReportRow* r = p.find(scheme)) s.xy.emplace_back(p.axis_value, r->mc.mean[rx]);
      }
      if (!s.xy.empty()) series.push_back(std::move(s));
    }
    const std::string who = rx == kIncumbent ? "incumbent" : "licensee";
    write_file(std::filesystem::path(*paths.plot_dir) / fmt::format("{}_vs_{}.svg", who, axis),
               svg_chart(fmt::format("{} RX ergodic rate vs {}", who, axis), x_label, series));
  }
}

}  // namespace lsa::sim
