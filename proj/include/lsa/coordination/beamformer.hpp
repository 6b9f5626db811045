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

#include "lsa/channel/scenario.hpp"
#include "lsa/rate/bound.hpp"

namespace lsa::coord {

using num::CVector;
using num::HermitianMatrix;
using rate::BeamformerKind;

struct Beamformer {
  CVector vector;  // unit norm
  BeamformerKind kind = BeamformerKind::kMF;
  int owner = kIncumbent;
};

/// h / ||h||. Throws DegenerateChannelError for a zero channel.
Beamformer mf_beamformer(const CVector& h_direct, int owner = kIncumbent);

/// Principal eigenvector of (R_cross + ridge I)^{-1/2} R_direct
/// (R_cross + ridge I)^{-1/2}, where R_cross is the covariance of the
/// link from this TX to the other pair's receiver.
///
/// If the principal eigenvalue is repeated (e.g. R_cross proportional to
/// R_direct, where the whitened matrix is a multiple of I), the vector is
/// taken inside that eigenspace as the direction of largest direct gain
/// u^H R_direct u, which is the limit of the principal eigenvector as a
/// vanishing ridge is added to R_cross. Phase is canonicalized.
Beamformer szf_beamformer(const HermitianMatrix& r_direct, const HermitianMatrix& r_cross_out, double ridge,
                          int owner = kIncumbent);

/// Ridge used for sZF construction: regularization_ridge(R_cross) for a
/// numerically singular R_cross, and 1e-9 * trace(R_direct) / n when
/// R_cross is identically zero.
double szf_ridge(const HermitianMatrix& r_direct, const HermitianMatrix& r_cross_out);

/// sZF vectors of both TXs with szf_ridge applied. Depends only on the
/// covariances, so both TXs compute the same pair.
rate::SzfVectors szf_beamformers(const channel::CovarianceSet& cov);

}  // namespace lsa::coord
