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

#include "lsa/channel/scenario.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <fmt/format.h>

#include "lsa/error.hpp"

namespace lsa::channel {

void ScenarioConfig::validate() const {
  if (m1 < 1 || m2 < 1) throw ValidationError("antenna counts must be positive");
  if (!(p1_max > 0.0) || !(p2_max > 0.0)) throw ValidationError("max powers must be > 0");
  if (!(n0 > 0.0)) throw ValidationError("noise power must be > 0");
  if (!(tau1 > 0.0)) throw ValidationError("tau1 must be > 0");
  if (!(rho >= 0.0 && rho < 1.0)) throw ValidationError("rho must lie in [0, 1)");
  for (const auto& row : beta) {
    for (double b : row) {
      if (!(b > 0.0)) throw ValidationError("beta entries must be > 0");
    }
  }
  if (n_samples < 1) throw ValidationError("n_samples must be positive");
}

ScenarioConfig with_snr_db(ScenarioConfig cfg, double snr_db) {
  const double p = cfg.n0 * std::pow(10.0, snr_db / 10.0);
  cfg.p1_max = p;
  cfg.p2_max = p;
  return cfg;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view v) {
  T out{};
  const auto* end = v.data() + v.size();
  const auto [ptr, ec] = std::from_chars(v.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw ValidationError(fmt::format("config: bad value '{}' for key '{}'", v, key));
  }
  return out;
}

}  // namespace

ScenarioConfig parse_config(std::string_view text) {
  ScenarioConfig cfg;
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError(fmt::format("config line {}: expected key = value", line_no));
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view val = trim(line.substr(eq + 1));
    if (!seen.emplace(key).second) throw ValidationError(fmt::format("config: duplicate key '{}'", key));

    if (key == "m1") cfg.m1 = parse_number<int>(key, val);
    else if (key == "m2") cfg.m2 = parse_number<int>(key, val);
    else if (key == "p1_max") cfg.p1_max = parse_number<double>(key, val);
    else if (key == "p2_max") cfg.p2_max = parse_number<double>(key, val);
    else if (key == "n0") cfg.n0 = parse_number<double>(key, val);
    else if (key == "tau1") cfg.tau1 = parse_number<double>(key, val);
    else if (key == "rho") cfg.rho = parse_number<double>(key, val);
    else if (key == "beta11") cfg.beta[0][0] = parse_number<double>(key, val);
    else if (key == "beta12") cfg.beta[0][1] = parse_number<double>(key, val);
    else if (key == "beta21") cfg.beta[1][0] = parse_number<double>(key, val);
    else if (key == "beta22") cfg.beta[1][1] = parse_number<double>(key, val);
    else if (key == "seed") cfg.seed = parse_number<std::uint64_t>(key, val);
    else if (key == "n_samples") cfg.n_samples = parse_number<std::size_t>(key, val);
    else throw ValidationError(fmt::format("config: unknown key '{}'", key));
  }
  cfg.validate();
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_config(const ScenarioConfig& cfg) {
  return fmt::format(
      "m1 = {}\nm2 = {}\np1_max = {}\np2_max = {}\nn0 = {}\ntau1 = {}\nrho = {}\n"
      "beta11 = {}\nbeta12 = {}\nbeta21 = {}\nbeta22 = {}\nseed = {}\nn_samples = {}\n",
      cfg.m1, cfg.m2, cfg.p1_max, cfg.p2_max, cfg.n0, cfg.tau1, cfg.rho, cfg.beta[0][0],
      cfg.beta[0][1], cfg.beta[1][0], cfg.beta[1][1], cfg.seed, cfg.n_samples);
}

CovarianceSet build_covariances(const ScenarioConfig& cfg) {
  cfg.validate();
  CovarianceSet cov;
  cov.n0 = cfg.n0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const int n = cfg.antennas(j);
      num::CMatrix m(n, n);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) m(a, b) = cfg.beta[i][j] * std::pow(cfg.rho, std::abs(a - b));
      }
      cov.r[i][j] = HermitianMatrix(m);
    }
  }
  return cov;
}

CovarianceSet swap_pairs(const CovarianceSet& cov) {
  CovarianceSet out;
  out.n0 = cov.n0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out.r[i][j] = cov.r[other(i)][other(j)];
  }
  return out;
}

ChannelSampler::ChannelSampler(const CovarianceSet& cov) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) sqrt_[i][j] = num::psd_sqrt(cov.r[i][j]);
  }
}

ChannelDraw ChannelSampler::draw(RngStream& rng) const {
  ChannelDraw d;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const int n = sqrt_[i][j].dim();
      CVector z(n);
      for (int k = 0; k < n; ++k) z(k) = rng.cscg();
      d.h[i][j] = sqrt_[i][j].matrix() * z;
    }
  }
  return d;
}

ChannelDraw sample_channels(const CovarianceSet& cov, RngStream& rng) {
  return ChannelSampler(cov).draw(rng);
}

}  // namespace lsa::channel
