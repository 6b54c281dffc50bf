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

#include "dynamics.hpp"

#include <cmath>
#include <string>

#include "hamiltonians.hpp"

namespace iondfs {

PulseSchedule alternation_schedule(int i, int j, double g, double total_time, int n, int n_qubits) {
  if (n < 1) raise(ErrorCode::invalid_argument, "alternation_schedule: n must be >= 1");
  if (total_time <= 0.0) raise(ErrorCode::invalid_argument, "alternation_schedule: total_time must be > 0");
  const double tau = total_time / n;
  const ComplexMatrix hx = h_xx(i, j, g, n_qubits);
  const ComplexMatrix hy = h_yy(i, j, g, n_qubits);
  PulseSchedule schedule;
  schedule.n_alternations = n;
  schedule.segments.reserve(2 * static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    schedule.segments.push_back({hx, tau});
    schedule.segments.push_back({hy, tau});
  }
  return schedule;
}

ComplexMatrix evolve_closed(const ComplexMatrix& psi_or_rho, const PulseSchedule& schedule) {
  const bool is_state_vector = (psi_or_rho.cols == 1 && psi_or_rho.rows > 1);
  if (!is_state_vector && !psi_or_rho.is_square())
    raise(ErrorCode::dimension_mismatch, "evolve_closed: expected a column vector or square matrix");
  ComplexMatrix state = psi_or_rho;
  for (const PulseSegment& seg : schedule.segments) {
    if (seg.hamiltonian.rows != state.rows)
      raise(ErrorCode::dimension_mismatch, "evolve_closed: segment dimension mismatch");
    const ComplexMatrix u = expm_hermitian(seg.hamiltonian, seg.duration);
    state = is_state_vector ? u * state : u * state * adjoint(u);
  }
  return state;
}

ComplexMatrix lindblad_rhs(const ComplexMatrix& rho, const ComplexMatrix& h,
                           const std::vector<ComplexMatrix>& jump_operators,
                           const std::vector<double>& rates) {
  if (!rho.is_square() || !h.is_square() || rho.rows != h.rows)
    raise(ErrorCode::dimension_mismatch, "lindblad_rhs: dimension mismatch");
  if (jump_operators.size() != rates.size())
    raise(ErrorCode::invalid_argument, "lindblad_rhs: jump and rate counts differ");

  ComplexMatrix out = Complex(0.0, -1.0) * commutator(h, rho);
  for (size_t k = 0; k < jump_operators.size(); ++k) {
    const ComplexMatrix& l = jump_operators[k];
    if (l.rows != rho.rows)
      raise(ErrorCode::dimension_mismatch, "lindblad_rhs: jump operator dimension mismatch");
    if (rates[k] < 0.0) raise(ErrorCode::invalid_argument, "lindblad_rhs: negative rate");
    if (rates[k] == 0.0) continue;
    const ComplexMatrix ldag = adjoint(l);
    const ComplexMatrix ll = ldag * l;
    out = out + rates[k] * (l * rho * ldag - 0.5 * (ll * rho + rho * ll));
  }
  return out;
}

namespace {

bool is_diagonal(const ComplexMatrix& m) {
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (r != c && m(r, c) != Complex(0.0, 0.0)) return false;
  return true;
}

// Piecewise-constant-H right-hand side with a fast path for diagonal jumps:
// the dissipator then acts elementwise, dissipator(rho)_{rs} = W_{rs} rho_{rs}
// with W_{rs} = sum_k rate_k (d_r conj(d_s) - (|d_r|^2 + |d_s|^2)/2).
class Rhs {
 public:
  Rhs(const std::vector<ComplexMatrix>& jumps, const std::vector<double>& rates, int dim)
      : jumps_(jumps), rates_(rates), dim_(dim) {
    diagonal_only_ = true;
    for (const ComplexMatrix& l : jumps) {
      if (l.rows != dim || l.cols != dim)
        raise(ErrorCode::dimension_mismatch, "integrate_lindblad: jump operator dimension mismatch");
      if (!is_diagonal(l)) diagonal_only_ = false;
    }
    for (double r : rates_)
      if (r < 0.0) raise(ErrorCode::invalid_argument, "integrate_lindblad: negative rate");
    if (diagonal_only_) {
      weights_.assign(static_cast<size_t>(dim) * dim, Complex(0.0, 0.0));
      for (size_t k = 0; k < jumps_.size(); ++k) {
        const ComplexMatrix& l = jumps_[k];
        for (int r = 0; r < dim; ++r) {
          for (int s = 0; s < dim; ++s) {
            const Complex dr = l(r, r), ds = l(s, s);
            weights_[static_cast<size_t>(r) * dim + s] +=
                rates_[k] * (dr * std::conj(ds) - 0.5 * (std::norm(dr) + std::norm(ds)));
          }
        }
      }
    } else {
      for (size_t k = 0; k < jumps_.size(); ++k) {
        adjoints_.push_back(adjoint(jumps_[k]));
        products_.push_back(adjoints_[k] * jumps_[k]);
      }
    }
  }

  ComplexMatrix operator()(const ComplexMatrix& h, const ComplexMatrix& rho) const {
    ComplexMatrix out = Complex(0.0, -1.0) * commutator(h, rho);
    if (diagonal_only_) {
      for (size_t idx = 0; idx < out.data.size(); ++idx)
        out.data[idx] += weights_[idx] * rho.data[idx];
    } else {
      for (size_t k = 0; k < jumps_.size(); ++k) {
        if (rates_[k] == 0.0) continue;
        out = out + rates_[k] * (jumps_[k] * rho * adjoints_[k] -
                                 0.5 * (products_[k] * rho + rho * products_[k]));
      }
    }
    return out;
  }

 private:
  const std::vector<ComplexMatrix>& jumps_;
  const std::vector<double>& rates_;
  int dim_;
  bool diagonal_only_ = false;
  std::vector<Complex> weights_;
  std::vector<ComplexMatrix> adjoints_;
  std::vector<ComplexMatrix> products_;
};

void axpy(ComplexMatrix& y, double a, const ComplexMatrix& x) {
  for (size_t k = 0; k < y.data.size(); ++k) y.data[k] += a * x.data[k];
}

}  // namespace

ExperimentResult integrate_lindblad(const ComplexMatrix& rho0, const LindbladModel& model,
                                    double max_step, const CodeSpace& observer,
                                    bool track_spectrum) {
  if (!rho0.is_square()) raise(ErrorCode::dimension_mismatch, "integrate_lindblad: rho0 not square");
  if (max_step <= 0.0) raise(ErrorCode::invalid_argument, "integrate_lindblad: step must be > 0");
  if (model.jump_operators.size() != model.rates.size())
    raise(ErrorCode::invalid_argument, "integrate_lindblad: jump and rate counts differ");
  const int dim = rho0.rows;
  if (observer.projector.rows != dim)
    raise(ErrorCode::dimension_mismatch, "integrate_lindblad: observer code dimension mismatch");

  const Rhs rhs(model.jump_operators, model.rates, dim);

  ExperimentResult result;
  ComplexMatrix rho = rho0;
  double t = 0.0;
  result.times.push_back(t);
  result.leakage_series.push_back(leakage(rho, observer));
  if (track_spectrum) result.min_eigenvalue = std::numeric_limits<double>::infinity();

  auto record = [&](double time) {
    result.times.push_back(time);
    result.leakage_series.push_back(leakage(rho, observer));
    const Complex tr = trace(rho);
    const double drift = std::abs(tr - Complex(1.0, 0.0));
    result.max_trace_drift = std::max(result.max_trace_drift, drift);
    // Written so a NaN drift (overflow feeding back into the trace) also
    // trips the guard instead of comparing false.
    if (!(drift <= 1e-6))
      raise(ErrorCode::step_too_large,
            "integrate_lindblad: trace drift " + std::to_string(drift) + " exceeds 1e-6");
    double herm = 0.0;
    for (int r = 0; r < dim; ++r)
      for (int s = r; s < dim; ++s)
        herm = std::max(herm, std::abs(rho(r, s) - std::conj(rho(s, r))));
    result.max_hermiticity_error = std::max(result.max_hermiticity_error, herm);
    if (track_spectrum) {
      const EigResult eig = herm_eig(symmetrize(rho));
      result.min_eigenvalue = std::min(result.min_eigenvalue, eig.eigenvalues.front());
    }
  };

  for (const PulseSegment& seg : model.schedule.segments) {
    if (seg.hamiltonian.rows != dim)
      raise(ErrorCode::dimension_mismatch, "integrate_lindblad: segment dimension mismatch");
    if (seg.duration < 0.0) raise(ErrorCode::invalid_argument, "integrate_lindblad: negative duration");
    if (seg.duration == 0.0) continue;
    // The -1e-9 slack keeps exact divisions from picking up a spurious step.
    const int steps = std::max(1, static_cast<int>(std::ceil(seg.duration / max_step - 1e-9)));
    const double dt = seg.duration / steps;
    for (int sidx = 0; sidx < steps; ++sidx) {
      const ComplexMatrix k1 = rhs(seg.hamiltonian, rho);
      ComplexMatrix stage = rho;
      axpy(stage, 0.5 * dt, k1);
      const ComplexMatrix k2 = rhs(seg.hamiltonian, stage);
      stage = rho;
      axpy(stage, 0.5 * dt, k2);
      const ComplexMatrix k3 = rhs(seg.hamiltonian, stage);
      stage = rho;
      axpy(stage, dt, k3);
      const ComplexMatrix k4 = rhs(seg.hamiltonian, stage);
      axpy(rho, dt / 6.0, k1);
      axpy(rho, dt / 3.0, k2);
      axpy(rho, dt / 3.0, k3);
      axpy(rho, dt / 6.0, k4);
      t += dt;
      record(t);
    }
  }

  result.final_rho = std::move(rho);
  double integral = 0.0;
  for (size_t k = 1; k < result.times.size(); ++k)
    integral += 0.5 * (result.times[k] - result.times[k - 1]) *
                (result.leakage_series[k] + result.leakage_series[k - 1]);
  result.integrated_leakage = integral;
  return result;
}

double fidelity(const ComplexMatrix& rho_a, const ComplexMatrix& rho_b) {
  if (!rho_a.is_square() || !rho_b.is_square() || rho_a.rows != rho_b.rows)
    raise(ErrorCode::dimension_mismatch, "fidelity: dimension mismatch");
  const ComplexMatrix root_a = sqrtm_psd(rho_a);
  const ComplexMatrix inner = root_a * rho_b * root_a;
  const ComplexMatrix root_inner = sqrtm_psd(inner);
  const double f = trace(root_inner).real();
  return std::max(f, 0.0);
}

ExperimentResult run_alternation_experiment(int n, double gamma, double g, double total_time,
                                            const ComplexMatrix& rho0, int i, int j,
                                            const CodeSpace& code, double max_step) {
  if (gamma < 0.0) raise(ErrorCode::invalid_argument, "run_alternation_experiment: gamma must be >= 0");
  LindbladModel model;
  model.schedule = alternation_schedule(i, j, g, total_time, n, code.n_qubits);
  model.jump_operators.push_back(collective_sz(code.n_qubits));
  model.rates.push_back(gamma);

  ExperimentResult result = integrate_lindblad(rho0, model, max_step, code);

  const ComplexMatrix u = expm_hermitian(h_xy(i, j, g, code.n_qubits), total_time);
  const ComplexMatrix target = u * rho0 * adjoint(u);
  result.fidelity_vs_target = fidelity(target, result.final_rho);
  return result;
}

}  // namespace iondfs
