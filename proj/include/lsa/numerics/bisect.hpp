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

#include <cmath>

namespace lsa::num {

struct BisectionResult {
  double x = 0.0;
  double residual = 0.0;  // f(x) - target, always >= 0
  int iterations = 0;
};

/// Boundary of {x : f(x) >= target} inside [feasible, infeasible] for a
/// continuous monotone f with f(feasible) >= target > f(infeasible).
/// The endpoints may be given in either order. Returns the feasible-side
/// bracket end once f(x) - target <= tol or after max_iter halvings.
template <typename F>
BisectionResult bisect_boundary(F&& f, double target, double feasible, double infeasible,
                                double tol = 1e-8, int max_iter = 200) {
  BisectionResult out{feasible, f(feasible) - target, 0};
  if (out.residual <= tol) return out;
  double good = feasible;
  double bad = infeasible;
  for (int it = 1; it <= max_iter; ++it) {
    const double mid = 0.5 * (good + bad);
    if (mid == good || mid == bad) break;
    const double r = f(mid) - target;
    out.iterations = it;
    if (r >= 0.0) {
      good = mid;
      out.x = mid;
      out.residual = r;
      if (r <= tol) break;
    } else {
      bad = mid;
    }
  }
  return out;
}

}  // namespace lsa::num
