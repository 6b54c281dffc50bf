// Copyright 2026 The iondfs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <utility>
#include <vector>

namespace iondfs {

// Closed-form model of the out-of-code population for a single pair pulse at
// g = 1, and its accumulation over an alternation sequence.

// sin^2(t)
double analytic_leakage(double t);

// P(t) = t - sin(2t)/2, the integral of the leakage over one xx+yy pair of
// duration t each (both halves contribute sin^2 by symmetry).
double analytic_integrated_population(double t);

// n P(T/n) = T - (n/2) sin(2T/n); for large n this falls off as
// (2/3) T^3 / n^2, the quadratic suppression in the number of alternations.
double analytic_total_population(double total_time, int n);

struct PowerLawFit {
  double exponent = 0.0;
  double log_prefactor = 0.0;
  double residual = 0.0;  // RMS deviation in log space
  int n_min = 0;          // smallest n used
  int n_max = 0;          // largest n used
};

// Least squares of log(value) against log(n) over the points with n >= n_min.
// Requires at least 4 such points, all with positive values.
PowerLawFit fit_power_law(const std::vector<std::pair<int, double>>& points, int n_min);

}  // namespace iondfs
