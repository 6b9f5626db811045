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

#include "lsa/baselines/baselines.hpp"

#include <algorithm>
#include <optional>

#include "lsa/coordination/beamformer.hpp"
#include "lsa/coordination/strategy.hpp"
#include "lsa/error.hpp"
#include "lsa/numerics/bisect.hpp"

namespace lsa::baseline {

std::string_view to_string(BaselineScheme s) {
  return s == BaselineScheme::kInterferenceTemperature ? "inttemp" : "benchmark";
}

namespace {

double mf_rate(double gamma, const Eigen::VectorXd& eig, rate::EigenvaluePolicy policy) {
  if (gamma <= 0.0) return 0.0;
  return rate::lemma1_rate(gamma, std::span<const double>(eig.data(), static_cast<std::size_t>(eig.size())), policy);
}

}  // namespace

BaselineResult interference_temperature_scheme(const channel::ScenarioConfig& cfg, const channel::CovarianceSet& cov,
                                               rate::EigenvaluePolicy policy) {
  cfg.validate();
  const Eigen::VectorXd eig11 = num::eigenvalues(cov.link(kIncumbent, kIncumbent));
  const double n0 = cov.n0;
  const double tau = cfg.tau1;
  auto incumbent = [&](double level) { return mf_rate(cfg.p1_max / (n0 + level), eig11, policy); };

  if (incumbent(0.0) < tau) throw InfeasibleError("interference temperature: tau1 unreachable at zero interference");

  // Bracket [0, hi], hi doubled from N0 until the rate drops below tau1.
  double hi = n0;
  while (incumbent(hi) >= tau) {
    hi *= 2.0;
    if (hi > 1e300) throw Error("interference temperature: no bracket found");
  }
  const auto solved =
      num::bisect_boundary(incumbent, tau, 0.0, hi, coord::kBisectionTol, coord::kBisectionMaxIter);

  BaselineResult out;
  out.scheme = BaselineScheme::kInterferenceTemperature;
  out.interference_threshold = solved.x;
  out.p1 = cfg.p1_max;

  const auto& r22 = cov.link(kLicensee, kLicensee);
  const auto& r12 = cov.link(kIncumbent, kLicensee);
  out.tx2_beam = coord::szf_beamformer(r22, r12, coord::szf_ridge(r22, r12), kLicensee).vector;
  const double leak = r12.quadratic_form(out.tx2_beam);
  out.p2 = leak > 0.0 ? std::min(out.interference_threshold / leak, cfg.p2_max) : cfg.p2_max;

  // The licensee bound uses the same rules as the coordinated MF-SZF pair.
  rate::SzfVectors szf = coord::szf_beamformers(cov);
  szf[kLicensee] = out.tx2_beam;
  const rate::RateContext ctx(cov, szf, policy);
  const rate::KindPair kinds{rate::BeamformerKind::kMF, rate::BeamformerKind::kSZF};
  out.incumbent_rate = ctx.bound(kIncumbent, kinds, {out.p1, out.p2});
  out.licensee_rate = ctx.bound(kLicensee, kinds, {out.p1, out.p2});
  return out;
}

BaselineResult coordination_benchmark(const channel::ScenarioConfig& cfg, const channel::CovarianceSet& cov,
                                      rate::EigenvaluePolicy policy) {
  cfg.validate();
  const Eigen::VectorXd eig11 = num::eigenvalues(cov.link(kIncumbent, kIncumbent));
  const Eigen::VectorXd eig22 = num::eigenvalues(cov.link(kLicensee, kLicensee));
  const double lmin12 = std::max(num::eigenvalues(cov.link(kIncumbent, kLicensee))(0), 0.0);
  const double lmin21 = std::max(num::eigenvalues(cov.link(kLicensee, kIncumbent))(0), 0.0);
  const double n0 = cov.n0;
  const double tau = cfg.tau1;

  auto constraint = [&](double p1, double p2) { return mf_rate(p1 / (n0 + p2 * lmin12), eig11, policy); };
  auto objective = [&](double p1, double p2) { return mf_rate(p2 / (n0 + p1 * lmin21), eig22, policy); };

  struct Candidate {
    double p1, p2;
  };
  std::optional<Candidate> a, b;

  // (a) TX 1 at full power, largest p2 meeting the constraint.
  {
    auto f = [&](double p2) { return constraint(cfg.p1_max, p2); };
    if (f(cfg.p2_max) >= tau) {
      a = Candidate{cfg.p1_max, cfg.p2_max};
    } else if (f(0.0) >= tau) {
      a = Candidate{cfg.p1_max,
                    num::bisect_boundary(f, tau, 0.0, cfg.p2_max, coord::kBisectionTol, coord::kBisectionMaxIter).x};
    }
  }
  // (b) TX 2 at full power, smallest p1 meeting the constraint.
  {
    auto f = [&](double p1) { return constraint(p1, cfg.p2_max); };
    if (f(cfg.p1_max) >= tau) {
      b = Candidate{
          num::bisect_boundary(f, tau, cfg.p1_max, 0.0, coord::kBisectionTol, coord::kBisectionMaxIter).x,
          cfg.p2_max};
    }
  }
  if (!a && !b) throw InfeasibleError("coordination benchmark: constraint unreachable");

  Candidate best = a ? *a : *b;
  if (a && b && objective(b->p1, b->p2) > objective(a->p1, a->p2)) best = *b;

  BaselineResult out;
  out.scheme = BaselineScheme::kBenchmark;
  out.p1 = best.p1;
  out.p2 = best.p2;
  out.ideal_leakage = {lmin12, lmin21};
  out.incumbent_rate = {constraint(best.p1, best.p2), kIncumbent, false};
  out.licensee_rate = {objective(best.p1, best.p2), kLicensee, false};
  return out;
}

}  // namespace lsa::baseline
