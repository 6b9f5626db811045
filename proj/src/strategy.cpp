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

#include "lsa/coordination/strategy.hpp"

#include "lsa/error.hpp"
#include "lsa/numerics/bisect.hpp"

namespace lsa::coord {

std::string_view to_string(PowerPolicy p) { return p == PowerPolicy::kP1Full ? "P1" : "P2"; }

std::string Strategy::name() const {
  std::string s(rate::to_string(kind1));
  s += '-';
  s += rate::to_string(kind2);
  s += '-';
  s += to_string(policy);
  return s;
}

bool check_feasibility(const channel::ScenarioConfig& cfg, const channel::CovarianceSet& cov,
                       rate::EigenvaluePolicy policy) {
  const Eigen::VectorXd eig = num::eigenvalues(cov.link(kIncumbent, kIncumbent));
  const double rate = rate::lemma1_rate(cfg.p1_max / cov.n0,
                                        std::span<const double>(eig.data(), static_cast<std::size_t>(eig.size())),
                                        policy);
  return rate >= cfg.tau1;
}

PowerResolution resolve_power(const rate::KindPair& kinds, PowerPolicy policy, const rate::RateContext& ctx,
                              const channel::ScenarioConfig& cfg) {
  const double tau = cfg.tau1;
  PowerResolution out;
  if (policy == PowerPolicy::kP1Full) {
    auto incumbent = [&](double p2) { return ctx.bound(kIncumbent, kinds, {cfg.p1_max, p2}).value; };
    out.p1 = cfg.p1_max;
    if (incumbent(cfg.p2_max) >= tau) {
      out.p2 = cfg.p2_max;
      out.feasible = true;
    } else if (incumbent(0.0) < tau) {
      out.p2 = 0.0;
    } else {
      const auto r = num::bisect_boundary(incumbent, tau, 0.0, cfg.p2_max, kBisectionTol, kBisectionMaxIter);
      out.p2 = r.x;
      out.feasible = true;
      out.interior = r.x > 0.0;
    }
  } else {
    auto incumbent = [&](double p1) { return ctx.bound(kIncumbent, kinds, {p1, cfg.p2_max}).value; };
    out.p1 = cfg.p1_max;
    out.p2 = cfg.p2_max;
    if (incumbent(cfg.p1_max) >= tau) {
      const auto r = num::bisect_boundary(incumbent, tau, cfg.p1_max, 0.0, kBisectionTol, kBisectionMaxIter);
      out.p1 = r.x;
      out.feasible = true;
      out.interior = r.x < cfg.p1_max;
    }
  }
  return out;
}

PowerResolution resolve_power(const rate::KindPair& kinds, PowerPolicy policy, const channel::CovarianceSet& cov,
                              const channel::ScenarioConfig& cfg, const rate::SzfVectors& szf) {
  return resolve_power(kinds, policy, rate::RateContext(cov, szf), cfg);
}

StrategyTable select_strategy(const channel::ScenarioConfig& cfg, const channel::CovarianceSet& cov,
                              rate::EigenvaluePolicy policy) {
  cfg.validate();
  if (!check_feasibility(cfg, cov, policy)) {
    throw InfeasibleError("tau1 exceeds the interference-free full-power MF rate of the incumbent");
  }
  StrategyTable table;
  table.szf = szf_beamformers(cov);
  const rate::RateContext ctx(cov, table.szf, policy);

  bool found = false;
  for (PowerPolicy pol : {PowerPolicy::kP1Full, PowerPolicy::kP2Full}) {
    for (BeamformerKind k1 : {BeamformerKind::kMF, BeamformerKind::kSZF}) {
      for (BeamformerKind k2 : {BeamformerKind::kMF, BeamformerKind::kSZF}) {
        const std::size_t idx = strategy_index(pol, k1, k2);
        Strategy& s = table.entries[idx];
        s.kind1 = k1;
        s.kind2 = k2;
        s.policy = pol;
        const PowerResolution res = resolve_power(s.kinds(), pol, ctx, cfg);
        s.p1 = res.p1;
        s.p2 = res.p2;
        s.feasible = res.feasible;
        s.interior = res.interior;
        s.incumbent_bound = ctx.bound(kIncumbent, s.kinds(), s.powers());
        s.licensee_bound = ctx.bound(kLicensee, s.kinds(), s.powers());
        if (s.feasible && (!found || s.licensee_bound.value > table.best().licensee_bound.value)) {
          table.selected = idx;
          found = true;
        }
      }
    }
  }
  // MF-MF-P1 contains the p2 -> 0 limit, so a feasible scenario always has one.
  if (!found) throw InfeasibleError("no feasible strategy");
  return table;
}

}  // namespace lsa::coord
