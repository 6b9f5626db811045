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

namespace lsa::num {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;

/// Exponential integral E1(x) = int_x^inf e^{-t}/t dt for x > 0.
/// Power series on (0, 1], Lentz continued fraction above. Throws
/// DomainError for x <= 0 or NaN.
double exp_integral_e1(double x);

/// e^x * E1(x), evaluated without forming e^x so it stays finite for
/// arguments where e^x overflows.
double scaled_exp_integral_e1(double x);

}  // namespace lsa::num
