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

#include "lsa/coordination/beamformer.hpp"

#include <algorithm>
#include <cmath>

#include "lsa/error.hpp"

namespace lsa::coord {

Beamformer mf_beamformer(const CVector& h_direct, int owner) {
  const double n = h_direct.norm();
  if (!(n > 0.0)) throw DegenerateChannelError("mf_beamformer: zero direct channel");
  return {h_direct / n, BeamformerKind::kMF, owner};
}

Beamformer szf_beamformer(const HermitianMatrix& r_direct, const HermitianMatrix& r_cross_out, double ridge,
                          int owner) {
  if (r_direct.dim() != r_cross_out.dim()) throw ValidationError("szf_beamformer: dimension mismatch");
  const HermitianMatrix w = num::psd_inv_sqrt(r_cross_out, ridge);
  const HermitianMatrix m = HermitianMatrix::symmetrize(w.matrix() * r_direct.matrix() * w.matrix());
  const num::EigenSystem es = num::eigh(m);
  const Eigen::Index n = es.values.size();
  const double top = es.values(n - 1);

  Eigen::Index first = n - 1;
  const double cluster_tol = 1e-8 * std::max(std::abs(top), 1e-300);
  while (first > 0 && top - es.values(first - 1) <= cluster_tol) --first;

  CVector u;
  if (first == n - 1) {
    u = es.vectors.col(n - 1);
  } else {
    const num::CMatrix basis = es.vectors.rightCols(n - first);
    const HermitianMatrix gain = HermitianMatrix::symmetrize(basis.adjoint() * r_direct.matrix() * basis);
    const num::EigenSystem inner = num::eigh(gain);
    u = basis * inner.vectors.col(inner.vectors.cols() - 1);
  }
  u.normalize();
  return {num::canonical_phase(u), BeamformerKind::kSZF, owner};
}

double szf_ridge(const HermitianMatrix& r_direct, const HermitianMatrix& r_cross_out) {
  if (r_cross_out.dim() > 0 && r_cross_out.matrix().cwiseAbs().maxCoeff() == 0.0) {
    return 1e-9 * r_direct.trace() / r_direct.dim();
  }
  return num::regularization_ridge(r_cross_out);
}

rate::SzfVectors szf_beamformers(const channel::CovarianceSet& cov) {
  rate::SzfVectors out;
  for (int tx = 0; tx < 2; ++tx) {
    const auto& direct = cov.link(tx, tx);
    const auto& cross = cov.link(other(tx), tx);
    out[tx] = szf_beamformer(direct, cross, szf_ridge(direct, cross), tx).vector;
  }
  return out;
}

}  // namespace lsa::coord
