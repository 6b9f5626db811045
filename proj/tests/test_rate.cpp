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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "lsa/channel/rng.hpp"
#include "lsa/channel/scenario.hpp"
#include "lsa/error.hpp"
#include "lsa/rate/bound.hpp"
#include "lsa/rate/lemmas.hpp"
#include "lsa/sim/lemma_oracle.hpp"

using namespace lsa;
using namespace lsa::rate;
using num::CMatrix;
using num::Complex;
using num::CVector;
using num::HermitianMatrix;
using num::RVector;

namespace {

double lemma1(double gamma, const std::vector<double>& eig, EigenvaluePolicy p = EigenvaluePolicy::kStrict) {
  return lemma1_rate(gamma, eig, p);
}

// E[log2(1 + gamma X)] for X = l1 E1 + l2 E2 (unit exponentials), through
// the hypoexponential density.
double two_branch_quadrature(double gamma, double l1, double l2) {
  boost::math::quadrature::exp_sinh<double> q;
  return q.integrate([&](double x) {
    const double pdf = (std::exp(-x / l2) - std::exp(-x / l1)) / (l2 - l1);
    return std::log2(1.0 + gamma * x) * pdf;
  });
}

sim::OracleOptions quick_oracle(std::uint64_t stream, std::size_t n = 200000) {
  sim::OracleOptions o;
  o.seed = 77;
  o.stream = stream;
  o.n_samples = n;
  return o;
}

}  // namespace

TEST_CASE("single-branch rate equals its defining integral") {
  boost::math::quadrature::exp_sinh<double> q;
  for (double x : {1e-3, 0.3, 1.0, 10.0, 1e3, 1e6}) {
    const double ref = q.integrate([x](double t) { return std::log2(1.0 + x * t) * std::exp(-t); });
    CAPTURE(x);
    CHECK(exponential_rate(x) == doctest::Approx(ref).epsilon(1e-10));
  }
  CHECK(exponential_rate(0.0) == 0.0);
  CHECK(exponential_rate(1e-13) == 0.0);
  CHECK(exponential_rate(1.0) == doctest::Approx(0.860347382270886).epsilon(1e-13));
}

TEST_CASE("norm rate: two-branch case against the hypoexponential density") {
  for (auto [g, l1, l2] : {std::tuple{1.0, 0.5, 2.0}, std::tuple{10.0, 0.3, 0.31}, std::tuple{0.1, 1.0, 7.0}}) {
    CHECK(lemma1(g, {l1, l2}) == doctest::Approx(two_branch_quadrature(g, l1, l2)).epsilon(1e-9));
  }
}

TEST_CASE("norm rate: one branch reduces to the single exponential") {
  for (double g : {0.2, 1.0, 31.6}) {
    for (double l : {0.4, 2.5}) CHECK(lemma1(g, {l}) == doctest::Approx(exponential_rate(g * l)).epsilon(1e-14));
  }
}

TEST_CASE("norm rate: permutation and scaling invariance") {
  const std::vector<double> eig{0.375, 0.539, 1.0, 2.086, 3.3};
  const double base = lemma1(4.0, eig);
  std::vector<double> perm = eig;
  std::mt19937_64 gen(1);
  for (int k = 0; k < 10; ++k) {
    std::shuffle(perm.begin(), perm.end(), gen);
    CHECK(std::abs(lemma1(4.0, perm) - base) <= 1e-10);
  }
  for (double c : {0.1, 3.0, 17.0}) {
    std::vector<double> scaled = eig;
    for (double& v : scaled) v *= c;
    CHECK(std::abs(lemma1(4.0, scaled) - lemma1(4.0 * c, eig)) <= 1e-10);
  }
}

TEST_CASE("norm rate: properties") {
  const std::vector<double> eig{0.5, 1.0, 2.0};
  double prev = 0.0;
  for (double g = 0.01; g < 1e4; g *= 3.0) {
    const double v = lemma1(g, eig);
    CHECK(v > prev);
    prev = v;
  }
  // Jensen upper bound log2(1 + gamma tr R)
  CHECK(lemma1(5.0, eig) <= std::log2(1.0 + 5.0 * 3.5));
  CHECK_THROWS_AS(lemma1(0.0, eig), DomainError);
  CHECK_THROWS_AS(lemma1(-1.0, eig), DomainError);
  CHECK_THROWS_AS(lemma1(1.0, {1.0, -0.5}), DomainError);
}

TEST_CASE("norm rate: repeated eigenvalues") {
  CHECK_THROWS_AS(lemma1(1.0, {1.0, 1.0}), DistinctnessError);
  CHECK_THROWS_AS(lemma1(1.0, {1.0, 1.0 + 1e-12}), DistinctnessError);
  const double fb = lemma1(2.0, {1.0, 1.0, 3.0}, EigenvaluePolicy::kIntegralFallback);
  // continuity from a well-separated neighbour
  CHECK(fb == doctest::Approx(lemma1(2.0, {0.999, 1.001, 3.0})).epsilon(1e-5));
  // fallback agrees with the closed form where both apply
  const std::vector<double> eig{0.2, 0.9, 1.7, 2.4, 5.0, 6.1};
  CHECK(lemma1(3.0, eig, EigenvaluePolicy::kIntegralFallback) == doctest::Approx(lemma1(3.0, eig)).epsilon(1e-9));
}

TEST_CASE("norm rate: sampling oracle") {
  channel::RngStream rng(101);
  for (int dim : {2, 4, 6}) {
    const HermitianMatrix r = sim::random_with_spectrum(sim::random_distinct_spectrum(dim, rng), rng);
    const RVector e = num::eigenvalues(r);
    const double cf = lemma1_rate(2.5, std::span<const double>(e.data(), static_cast<std::size_t>(dim)));
    const auto mc = sim::mc_log_norm_rate(2.5, r, quick_oracle(static_cast<std::uint64_t>(dim)));
    CAPTURE(dim);
    CHECK(std::abs(cf - mc.mean) <= 4.0 * mc.std_error);
  }
}

TEST_CASE("projection rate reduces to the scalar case") {
  std::mt19937_64 gen(2);
  channel::RngStream rng(2);
  for (int dim : {1, 3, 5}) {
    const HermitianMatrix r = sim::random_psd(dim, rng);
    const CVector w = sim::random_unit_vector(dim, rng);
    const double lam = r.quadratic_form(w);
    CHECK(std::abs(lemma2_rate(3.0, r, w) - lemma1(3.0, {lam})) <= 1e-10);
    CHECK(std::abs(lemma2_rate(3.0, r, w) - exponential_rate(3.0 * lam)) <= 1e-10);
  }
  // n = 1: same as the norm rate with R = [lambda]
  const HermitianMatrix one = HermitianMatrix::diagonal(RVector::Constant(1, 0.7));
  CVector w1(1);
  w1(0) = Complex(0.0, 1.0);
  CHECK(std::abs(lemma2_rate(4.0, one, w1) - lemma1(4.0, {0.7})) <= 1e-10);
  // w orthogonal to the support
  RVector d(2);
  d << 1.0, 0.0;
  CVector e2 = CVector::Zero(2);
  e2(1) = 1.0;
  CHECK(lemma2_rate(5.0, HermitianMatrix::diagonal(d), e2) == 0.0);
  CHECK_THROWS_AS(lemma2_rate(1.0, one, CVector::Constant(1, 2.0)), ValidationError);
}

TEST_CASE("projection rate: sampling oracle") {
  channel::RngStream rng(303);
  const HermitianMatrix r = sim::random_psd(4, rng);
  const CVector w = sim::random_unit_vector(4, rng);
  const auto mc = sim::mc_log_proj_rate(6.0, r, w, quick_oracle(40));
  CHECK(std::abs(lemma2_rate(6.0, r, w) - mc.mean) <= 4.0 * mc.std_error);
}

TEST_CASE("ratio expectation: exact identities") {
  channel::RngStream rng(9);
  for (int dim = 1; dim <= 6; ++dim) {
    const HermitianMatrix a = sim::random_with_spectrum(sim::random_distinct_spectrum(dim, rng), rng);
    CAPTURE(dim);
    CHECK(std::abs(lemma3_ratio_expectation(a, a) - 1.0) <= 1e-10);
    for (double c : {0.0, 0.25, 4.0}) CHECK(std::abs(lemma3_ratio_expectation(a, a * c) - c) <= 1e-10);
  }
  const HermitianMatrix a1 = HermitianMatrix::diagonal(RVector::Constant(1, 2.0));
  const HermitianMatrix b1 = HermitianMatrix::diagonal(RVector::Constant(1, 0.5));
  CHECK(lemma3_ratio_expectation(a1, b1) == doctest::Approx(0.25));
}

TEST_CASE("ratio weights sum against the spectrum to one") {
  RVector lam(4);
  lam << 0.3, 0.8, 1.9, 4.0;
  const RVector d = ratio_weights(lam);
  CHECK(std::abs(lam.dot(d) - 1.0) <= 1e-12);
  for (int i = 0; i < 4; ++i) CHECK(d(i) > 0.0);
  for (int i = 1; i < 4; ++i) CHECK(d(i) < d(i - 1));
  const RVector f = ratio_weights(lam, EigenvaluePolicy::kIntegralFallback);
  CHECK((d - f).norm() <= 1e-9);
}

TEST_CASE("ratio expectation: sampling oracle and repeated eigenvalues") {
  channel::RngStream rng(55);
  const HermitianMatrix a = sim::random_with_spectrum(sim::random_distinct_spectrum(3, rng), rng);
  const HermitianMatrix b = sim::random_psd(3, rng);
  const auto mc = sim::mc_quadratic_ratio(a, b, quick_oracle(50, 400000));
  CHECK(std::abs(lemma3_ratio_expectation(a, b) - mc.mean) <= 4.0 * mc.std_error);

  const HermitianMatrix eye = HermitianMatrix::identity(3);
  CHECK_THROWS_AS(lemma3_ratio_expectation(eye, b), DistinctnessError);
  // A = I: E[x^H B x / ||x||^2] = tr(B) / n
  CHECK(lemma3_ratio_expectation(eye, b, EigenvaluePolicy::kIntegralFallback) ==
        doctest::Approx(b.trace() / 3.0).epsilon(1e-9));
  CHECK_THROWS_AS(lemma3_ratio_expectation(eye, HermitianMatrix::identity(2)), ValidationError);
}

TEST_CASE("matched-filter leakage") {
  const channel::CovarianceSet cov = channel::build_covariances(channel::ScenarioConfig{});
  const HermitianMatrix& rd = cov.link(0, 0);
  // isotropic cross link: leakage of any unit beam is the scale
  CHECK(mf_interference_gain(rd, HermitianMatrix::identity(4) * 0.3) == doctest::Approx(0.3).epsilon(1e-10));
  // proportional cross link c R: the beam follows h, so the leakage is
  // c E[h^H R h / ||h||^2] > c lambda_min, checked by sampling
  channel::RngStream rng(12);
  const channel::ChannelSampler sampler(cov);
  double acc = 0.0;
  const int n = 200000;
  double acc2 = 0.0;
  for (int k = 0; k < n; ++k) {
    const CVector h = sampler.draw(rng).h[0][0];
    const double v = cov.link(1, 0).quadratic_form(h) / h.squaredNorm();
    acc += v;
    acc2 += v * v;
  }
  const double mean = acc / n;
  const double se = std::sqrt((acc2 / n - mean * mean) / n);
  const double cf = mf_interference_gain(rd, cov.link(1, 0));
  CHECK(std::abs(cf - mean) <= 4.0 * se);
  CHECK(cf > 0.3 * num::eigenvalues(rd)(0));
}

TEST_CASE("rate bound structure") {
  const channel::ScenarioConfig cfg;
  const channel::CovarianceSet cov = channel::build_covariances(cfg);
  const SzfVectors szf{CVector::Constant(4, 0.5), CVector::Constant(4, 0.5)};
  const RateContext ctx(cov, szf);

  for (int rx : {kIncumbent, kLicensee}) {
    for (BeamformerKind own : {BeamformerKind::kMF, BeamformerKind::kSZF}) {
      KindPair kinds{BeamformerKind::kMF, BeamformerKind::kMF};
      kinds[static_cast<std::size_t>(rx)] = own;
      PowerPair powers{10.0, 10.0};
      powers[static_cast<std::size_t>(other(rx))] = 0.0;
      const RateBound exact = ctx.bound(rx, kinds, powers);
      CHECK_FALSE(exact.is_lower_bound);
      const RVector e = num::eigenvalues(cov.link(rx, rx));
      const double ref = own == BeamformerKind::kMF
                             ? lemma1_rate(10.0, std::span<const double>(e.data(), 4))
                             : exponential_rate(10.0 * cov.link(rx, rx).quadratic_form(szf[rx]));
      CHECK(exact.value == doctest::Approx(ref).epsilon(1e-13));

      double prev = exact.value;
      for (double p = 0.5; p <= 64.0; p *= 2.0) {
        powers[static_cast<std::size_t>(other(rx))] = p;
        const RateBound b = ctx.bound(rx, kinds, powers);
        CHECK(b.is_lower_bound);
        CHECK(b.value < prev);
        prev = b.value;
      }
    }
  }
  // free function and context agree
  const KindPair k{BeamformerKind::kSZF, BeamformerKind::kMF};
  CHECK(bound_rate(kLicensee, k, {3.0, 7.0}, cov, &szf).value == ctx.bound(kLicensee, k, {3.0, 7.0}).value);
  // sZF requested without vectors
  CHECK_THROWS(bound_rate(kLicensee, k, {3.0, 7.0}, cov, nullptr));
}
