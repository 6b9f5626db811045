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

#include "lsa/rate/bound.hpp"

#include <cmath>

#include "lsa/error.hpp"

namespace lsa::rate {

std::string_view to_string(BeamformerKind k) { return k == BeamformerKind::kMF ? "MF" : "SZF"; }

namespace {

void check_unit(const CVector& v, int expected_dim) {
  if (v.size() != expected_dim) throw ValidationError("sZF vector has wrong dimension");
  if (std::abs(v.norm() - 1.0) > 1e-10) throw ValidationError("sZF vector must have unit norm");
}

}  // namespace

RateContext::RateContext(const channel::CovarianceSet& cov, std::optional<SzfVectors> szf, EigenvaluePolicy policy)
    : cov_(cov), szf_(std::move(szf)), policy_(policy) {
  for (int rx = 0; rx < 2; ++rx) {
    const int tx = other(rx);
    direct_eigs_[rx] = num::eigenvalues(cov_.link(rx, rx));
    // Lemma-3 terms need distinct eigenvalues; leave them empty when the
    // covariance cannot support them so sZF-only strategies still work.
    try {
      mf_leak_[rx] = mf_interference_gain(cov_.link(tx, tx), cov_.link(rx, tx), policy_);
    } catch (const DistinctnessError&) {
    } catch (const DomainError&) {
    }
    if (szf_) {
      check_unit((*szf_)[tx], cov_.link(rx, tx).dim());
      check_unit((*szf_)[rx], cov_.link(rx, rx).dim());
      szf_leak_[rx] = cov_.link(rx, tx).quadratic_form((*szf_)[tx]);
      szf_gain_[rx] = cov_.link(rx, rx).quadratic_form((*szf_)[rx]);
    }
  }
}

double RateContext::interference_gain(int receiver, BeamformerKind kind) const {
  if (kind == BeamformerKind::kSZF) {
    if (!szf_leak_[receiver]) throw ValidationError("bound_rate: sZF vectors required");
    return *szf_leak_[receiver];
  }
  if (!mf_leak_[receiver]) {
    // Re-run to surface the original error to the caller.
    const int tx = other(receiver);
    return mf_interference_gain(cov_.link(tx, tx), cov_.link(receiver, tx), policy_);
  }
  return *mf_leak_[receiver];
}

RateBound RateContext::bound(int receiver, const KindPair& kinds, const PowerPair& powers) const {
  if (receiver != kIncumbent && receiver != kLicensee) throw ValidationError("bound_rate: receiver must be 0 or 1");
  const int tx = other(receiver);
  const double p_own = powers[receiver];
  const double p_other = powers[tx];
  if (!(p_own >= 0.0) || !(p_other >= 0.0)) throw DomainError("bound_rate: powers must be >= 0");

  RateBound out;
  out.receiver = receiver;
  out.is_lower_bound = p_other > 0.0;
  if (p_own == 0.0) return out;

  const double leak = p_other > 0.0 ? interference_gain(receiver, kinds[tx]) : 0.0;
  const double gamma = p_own / (cov_.n0 + p_other * leak);

  if (kinds[receiver] == BeamformerKind::kMF) {
    const auto& eig = direct_eigs_[receiver];
    out.value = lemma1_rate(gamma, std::span<const double>(eig.data(), static_cast<std::size_t>(eig.size())), policy_);
  } else {
    if (!szf_gain_[receiver]) throw ValidationError("bound_rate: sZF vectors required");
    out.value = *szf_gain_[receiver] <= 1e-14 ? 0.0 : exponential_rate(gamma * *szf_gain_[receiver]);
  }
  return out;
}

RateBound bound_rate(int receiver, const KindPair& kinds, const PowerPair& powers, const channel::CovarianceSet& cov,
                     const SzfVectors* szf, EigenvaluePolicy policy) {
  std::optional<SzfVectors> vecs;
  if (szf) vecs = *szf;
  return RateContext(cov, std::move(vecs), policy).bound(receiver, kinds, powers);
}

}  // namespace lsa::rate
