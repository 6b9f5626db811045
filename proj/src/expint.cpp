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

#include "lsa/numerics/expint.hpp"

#include <cmath>
#include <limits>

#include "lsa/error.hpp"

namespace lsa::num {
namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 500;

void check_domain(double x) {
  if (!(x > 0.0)) throw DomainError("exp_integral_e1: argument must be > 0");
}

// -gamma - ln x - sum_{k>=1} (-x)^k / (k * k!)
double e1_series(double x) {
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k <= kMaxIter; ++k) {
    term *= -x / k;
    const double contrib = term / k;
    sum += contrib;
    if (std::abs(contrib) < kEps * std::abs(sum)) break;
  }
  return -kEulerGamma - std::log(x) - sum;
}

// e^x E1(x) = 1/(x+1- 1/(x+3- 4/(x+5- ...))), modified Lentz.
double e1_scaled_fraction(double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIter; ++i) {
    const double an = -static_cast<double>(i) * i;
    b += 2.0;
    d = 1.0 / (an * d + b);
    c = b + an / c;
    const double del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double exp_integral_e1(double x) {
  check_domain(x);
  if (x <= 1.0) return e1_series(x);
  return std::exp(-x) * e1_scaled_fraction(x);
}

double scaled_exp_integral_e1(double x) {
  check_domain(x);
  if (x <= 1.0) return std::exp(x) * e1_series(x);
  return e1_scaled_fraction(x);
}

}  // namespace lsa::num
