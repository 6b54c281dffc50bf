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

#include "analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace iondfs {

double analytic_leakage(double t) {
  if (t < 0.0) raise(ErrorCode::invalid_argument, "analytic_leakage: t must be >= 0");
  const double s = std::sin(t);
  return s * s;
}

double analytic_integrated_population(double t) {
  if (t < 0.0) raise(ErrorCode::invalid_argument, "analytic_integrated_population: t must be >= 0");
  return t - 0.5 * std::sin(2.0 * t);
}

double analytic_total_population(double total_time, int n) {
  if (total_time <= 0.0)
    raise(ErrorCode::invalid_argument, "analytic_total_population: total_time must be > 0");
  if (n < 1) raise(ErrorCode::invalid_argument, "analytic_total_population: n must be >= 1");
  return total_time - 0.5 * n * std::sin(2.0 * total_time / n);
}

PowerLawFit fit_power_law(const std::vector<std::pair<int, double>>& points, int n_min) {
  std::vector<double> xs, ys;
  int used_min = 0, used_max = 0;
  for (const auto& [n, value] : points) {
    if (n < 1) raise(ErrorCode::invalid_argument, "fit_power_law: n must be >= 1");
    if (n < n_min) continue;
    if (value <= 0.0)
      raise(ErrorCode::non_positive_value,
            "fit_power_law: value " + std::to_string(value) + " at n=" + std::to_string(n) +
                " is not positive");
    xs.push_back(std::log(static_cast<double>(n)));
    ys.push_back(std::log(value));
    used_min = (used_min == 0) ? n : std::min(used_min, n);
    used_max = std::max(used_max, n);
  }
  if (xs.size() < 4)
    raise(ErrorCode::insufficient_points,
          "fit_power_law: need at least 4 points with n >= " + std::to_string(n_min));

  const size_t m = xs.size();
  double mean_x = 0.0, mean_y = 0.0;
  for (size_t k = 0; k < m; ++k) {
    mean_x += xs[k];
    mean_y += ys[k];
  }
  mean_x /= static_cast<double>(m);
  mean_y /= static_cast<double>(m);

  double sxx = 0.0, sxy = 0.0;
  for (size_t k = 0; k < m; ++k) {
    sxx += (xs[k] - mean_x) * (xs[k] - mean_x);
    sxy += (xs[k] - mean_x) * (ys[k] - mean_y);
  }
  if (sxx == 0.0) raise(ErrorCode::invalid_argument, "fit_power_law: all n values identical");

  PowerLawFit fit;
  fit.exponent = sxy / sxx;
  fit.log_prefactor = mean_y - fit.exponent * mean_x;
  double ss = 0.0;
  for (size_t k = 0; k < m; ++k) {
    const double r = ys[k] - (fit.log_prefactor + fit.exponent * xs[k]);
    ss += r * r;
  }
  fit.residual = std::sqrt(ss / static_cast<double>(m));
  fit.n_min = used_min;
  fit.n_max = used_max;
  return fit;
}

}  // namespace iondfs
