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

#include <limits>
#include <vector>

#include "codes.hpp"
#include "linalg.hpp"

namespace iondfs {

struct PulseSegment {
  ComplexMatrix hamiltonian;  // Hermitian
  double duration = 0.0;      // units of 1/g, >= 0
};

struct PulseSchedule {
  std::vector<PulseSegment> segments;
  int n_alternations = 1;

  double total_duration() const {
    double t = 0.0;
    for (const PulseSegment& seg : segments) t += seg.duration;
    return t;
  }
};

struct LindbladModel {
  PulseSchedule schedule;
  std::vector<ComplexMatrix> jump_operators;
  std::vector<double> rates;  // nonnegative, units of g
};

struct ExperimentResult {
  std::vector<double> times;           // includes t = 0
  std::vector<double> leakage_series;  // same length as times
  ComplexMatrix final_rho;
  double fidelity_vs_target = -1.0;  // negative until a target comparison is made
  double integrated_leakage = 0.0;   // trapezoid rule over the series

  // Integration diagnostics.
  double max_trace_drift = 0.0;
  double max_hermiticity_error = 0.0;
  // Smallest eigenvalue seen at any recorded time; NaN unless spectrum
  // tracking was requested (it costs an eigendecomposition per step).
  double min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
};

// 2n segments alternating h_xx and h_yy on pair (i,j), xx first, each of
// duration total_time/n. total_time is the time spent under EACH of the two
// couplings, so the wall duration is 2*total_time; the closed-system product
// equals exp(-i h_xy total_time) exactly because the two terms commute.
PulseSchedule alternation_schedule(int i, int j, double g, double total_time, int n, int n_qubits);

// Applies the segment unitaries in order. A column vector is evolved as a
// state, a square matrix as a density operator.
ComplexMatrix evolve_closed(const ComplexMatrix& psi_or_rho, const PulseSchedule& schedule);

// -i[H,rho] + sum_k rate_k (L rho L^dag - 1/2 {L^dag L, rho})
ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& h,
                           const std::vector<ComplexMatrix>& jump_operators,
                           const std::vector<double>& rates);

// Fixed-step RK4 with piecewise-constant H. Each segment is cut into
// ceil(duration/max_step) equal steps; leakage against `observer` and trace
// drift are recorded after every step. Raises step_too_large once trace
// drift exceeds 1e-6.
ExperimentResult integrate_lindblad(const ComplexMatrix& rho0, const LindbladModel& model,
                                    double max_step, const CodeSpace& observer,
                                    bool track_spectrum = false);

// Uhlmann fidelity tr sqrt(sqrt(a) b sqrt(a)), symmetric in its arguments.
double fidelity(const ComplexMatrix& rho_a, const ComplexMatrix& rho_b);

// Full pipeline: build the alternation schedule, integrate with the single
// collective-dephasing jump at rate gamma, and score against the ideal
// closed XY evolution exp(-i h_xy total_time) of rho0.
ExperimentResult run_alternation_experiment(int n, double gamma, double g, double total_time,
                                            const ComplexMatrix& rho0, int i, int j,
                                            const CodeSpace& code, double max_step);

}  // namespace iondfs
