// Copyright 2026 the spinsqueeze authors
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

#include "core/perturbation.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "core/errors.hpp"

namespace sqz {

namespace {

constexpr double kCommuteTol = 1e-10;

// Phase convention: the largest-magnitude component of each eigenvector is
// made real and positive. Keeps coefficient comparisons reproducible.
void fix_phases(DenseMat& v) {
  for (Index col = 0; col < v.cols(); ++col) {
    Index arg = 0;
    v.col(col).cwiseAbs().maxCoeff(&arg);
    const cplx pivot = v(arg, col);
    if (std::abs(pivot) > 0.0) v.col(col) *= std::conj(pivot) / std::abs(pivot);
  }
}

double denominator_floor(const Eigensystem& eig) {
  const double energy_span = eig.energies.size() > 0
                                 ? eig.energies.maxCoeff() - eig.energies.minCoeff()
                                 : 0.0;
  const double d_scale = eig.dissipator_diag.size() > 0 ? eig.dissipator_diag.cwiseAbs().maxCoeff() : 0.0;
  return 1e-12 * std::max(1.0, energy_span + d_scale);
}

}  // namespace

cplx Eigensystem::nh_energy_gap(Index n) const {
  return cplx(energies(n) - energies(index0), 0.0) - cplx(0.0, 0.5) * dissipator_diag(n);
}

Eigensystem build_eigensystem(const LindbladModel& model) {
  const Index dim = model.basis.dimension();
  const DenseMat h0 = model.h0.matrix().to_dense();
  const DenseMat dsum = model.dissipator_sum.matrix().to_dense();

  Eigen::SelfAdjointEigenSolver<DenseMat> es(h0);
  if (es.info() != Eigen::Success) fail(ErrorCode::SolverFailure, "eigensystem: H0 decomposition failed");
  RealVec energies = es.eigenvalues();
  DenseMat states = es.eigenvectors();

  // Within each degenerate H0 eigenspace rotate the basis to diagonalize the
  // dissipator sum; with [H0, D] = 0 this yields a joint eigenbasis.
  const double span = energies.size() > 1 ? energies(dim - 1) - energies(0) : 0.0;
  const double group_tol = 1e-9 * std::max(1.0, span);
  Index start = 0;
  while (start < dim) {
    Index stop = start + 1;
    while (stop < dim && energies(stop) - energies(start) <= group_tol) ++stop;
    if (stop - start > 1) {
      const DenseMat block = states.middleCols(start, stop - start);
      Eigen::SelfAdjointEigenSolver<DenseMat> block_es(DenseMat(block.adjoint() * dsum * block));
      states.middleCols(start, stop - start) = block * block_es.eigenvectors();
    }
    start = stop;
  }
  fix_phases(states);

  Eigensystem eig;
  eig.basis = model.basis;
  eig.energies = std::move(energies);
  eig.states = std::move(states);
  eig.dissipator_eig = eig.states.adjoint() * dsum * eig.states;
  eig.dissipator_diag = eig.dissipator_eig.diagonal();
  eig.commuting = commutator(model.h0, model.dissipator_sum).matrix().max_abs() < kCommuteTol;

  // The reference state is the projector target |dd...d> = e_0 in both bases.
  Index best = 0;
  eig.states.row(0).cwiseAbs().maxCoeff(&best);
  eig.index0 = best;

  const Vec phi0 = eig.states.col(eig.index0);
  for (const Jump& j : model.jumps) {
    const double defect = j.op.matrix().apply(phi0).norm();
    const double scale = std::max(1.0, j.op.matrix().max_abs());
    if (defect > 1e-8 * scale) {
      fail(ErrorCode::InvalidArgument,
           "eigensystem: reference state is not annihilated by a jump operator (norm " +
               std::to_string(defect) + ")");
    }
  }
  return eig;
}

Vec PerturbedState::assembled(double lambda_value) const {
  Vec out = phi0;
  if (order >= 1) out += lambda_value * psi1;
  if (order >= 2) out += (lambda_value * lambda_value) * psi2;
  return out;
}

PureState PerturbedState::state(double lambda_value) const {
  return PureState(basis, assembled(lambda_value)).normalized();
}

PerturbedState perturb_general(const Eigensystem& eig, const Operator& h1,
                               const std::vector<Jump>& jumps, int order, double lambda) {
  require_same_basis(eig.basis, h1.basis(), "perturb_general");
  if (order < 1 || order > 2) fail(ErrorCode::InvalidArgument, "perturbation order must be 1 or 2");
  const Index dim = eig.basis.dimension();
  const Index n0 = eig.index0;

  const DenseMat h1_eig = eig.states.adjoint() * h1.matrix().to_dense() * eig.states;
  const Vec h = h1_eig.col(n0);

  // Row/column n0 removed: c_{n0} = 0 and the n0 equation holds identically.
  const Index m = dim - 1;
  auto full_of = [n0](Index packed) { return packed < n0 ? packed : packed + 1; };

  Eigen::MatrixXcd a(m, m);
  for (Index r = 0; r < m; ++r) {
    const Index rf = full_of(r);
    for (Index cidx = 0; cidx < m; ++cidx) {
      const Index cf = full_of(cidx);
      cplx value = cplx(0.0, -0.5) * eig.dissipator_eig(rf, cf);
      if (rf == cf) value += cplx(eig.energies(rf) - eig.energies(n0), 0.0);
      a(r, cidx) = value;
    }
  }

  Eigen::FullPivLU<Eigen::MatrixXcd> lu(a);
  if (!lu.isInvertible()) {
    fail(ErrorCode::DegenerateSystem,
         "perturb_general: coefficient system is singular (degenerate coupling to the reference state)");
  }

  Vec rhs_c(m);
  for (Index r = 0; r < m; ++r) rhs_c(r) = -h(full_of(r));
  const Vec c_packed = lu.solve(rhs_c);

  PerturbedState out;
  out.basis = eig.basis;
  out.lambda = lambda;
  out.order = order;
  out.index0 = n0;
  out.phi0 = eig.states.col(n0);
  out.c = Vec::Zero(dim);
  for (Index r = 0; r < m; ++r) out.c(full_of(r)) = c_packed(r);
  out.psi1 = eig.states * out.c;
  out.d = Vec::Zero(dim);
  out.psi2 = Vec::Zero(dim);
  if (order < 2) return out;

  const cplx h00 = h1_eig(n0, n0);
  Vec g = eig.states.adjoint() * h1.matrix().apply(out.psi1);  // <n|H1|psi1>
  g -= h00 * out.c;
  const Vec phi0 = out.phi0;
  for (const Jump& j : jumps) {
    const Vec jump_psi1 = j.op.matrix().apply(out.psi1);
    const cplx overlap = jump_psi1.dot(phi0);  // <psi1|L^dag|phi0>
    if (overlap == cplx(0.0)) continue;
    g += cplx(0.0, j.rate) * overlap * (eig.states.adjoint() * jump_psi1);
  }

  Vec rhs_d(m);
  for (Index r = 0; r < m; ++r) rhs_d(r) = -g(full_of(r));
  const Vec d_packed = lu.solve(rhs_d);
  for (Index r = 0; r < m; ++r) out.d(full_of(r)) = d_packed(r);
  out.d(n0) = -0.5 * out.c.squaredNorm();
  out.psi2 = eig.states * out.d;
  return out;
}

PerturbedState perturb_commuting(const Eigensystem& eig, const Operator& h1,
                                 const std::vector<Jump>& jumps, int order, double lambda) {
  require_same_basis(eig.basis, h1.basis(), "perturb_commuting");
  if (order < 1 || order > 2) fail(ErrorCode::InvalidArgument, "perturbation order must be 1 or 2");
  if (!eig.commuting) {
    fail(ErrorCode::Unsupported,
         "perturb_commuting: dissipator sum does not commute with H0; use the general engine");
  }
  const Index dim = eig.basis.dimension();
  const Index n0 = eig.index0;
  const double floor = denominator_floor(eig);

  const DenseMat h1_eig = eig.states.adjoint() * h1.matrix().to_dense() * eig.states;
  const Vec h = h1_eig.col(n0);

  PerturbedState out;
  out.basis = eig.basis;
  out.lambda = lambda;
  out.order = order;
  out.index0 = n0;
  out.phi0 = eig.states.col(n0);
  out.c = Vec::Zero(dim);

  Vec z(dim);
  for (Index n = 0; n < dim; ++n) z(n) = eig.nh_energy_gap(n);
  const double h_scale = h.cwiseAbs().maxCoeff();
  for (Index n = 0; n < dim; ++n) {
    if (n == n0) continue;
    if (std::abs(h(n)) <= 1e-14 * std::max(1.0, h_scale)) continue;
    if (std::abs(z(n)) < floor) {
      fail(ErrorCode::DegenerateSystem,
           "perturb_commuting: vanishing non-Hermitian denominator for coupled state " +
               std::to_string(n));
    }
    out.c(n) = -h(n) / z(n);
  }
  out.psi1 = eig.states * out.c;
  out.d = Vec::Zero(dim);
  out.psi2 = Vec::Zero(dim);
  if (order < 2) return out;

  const cplx h00 = h1_eig(n0, n0);
  // Second-order terms; the jump-operator term is the purely dissipative one.
  Vec numer = h1_eig * out.c;            // sum_m <n|H1|m> c_m = -sum_m <n|H1|m> h_m / z_m
  numer = -numer;                        // + sum_m <n|H1|m> h_m / z_m
  for (Index n = 0; n < dim; ++n) {
    if (n == n0) continue;
    cplx value = numer(n);
    value -= h00 * h(n) / z(n);          // - <0|H1|0> <n|H1|0> / z_n (second factor applied below)
    if (value != cplx(0.0) && std::abs(z(n)) < floor) {
      fail(ErrorCode::DegenerateSystem,
           "perturb_commuting: vanishing denominator in second order for state " + std::to_string(n));
    }
    out.d(n) = std::abs(z(n)) < floor ? cplx(0.0) : value / z(n);
  }
  const Vec phi0 = out.phi0;
  for (const Jump& j : jumps) {
    const Vec jump_psi1 = j.op.matrix().apply(out.psi1);
    const cplx overlap = jump_psi1.dot(phi0);  // <psi1|L^dag|phi0>
    if (overlap == cplx(0.0)) continue;
    const Vec projected = eig.states.adjoint() * jump_psi1;
    for (Index n = 0; n < dim; ++n) {
      if (n == n0 || projected(n) == cplx(0.0)) continue;
      if (std::abs(z(n)) < floor) {
        fail(ErrorCode::DegenerateSystem,
             "perturb_commuting: vanishing denominator in dissipative term for state " +
                 std::to_string(n));
      }
      out.d(n) += cplx(0.0, -j.rate) * projected(n) * overlap / z(n);
    }
  }
  out.d(n0) = -0.5 * out.c.squaredNorm();
  out.psi2 = eig.states * out.d;
  return out;
}

PerturbedState perturb(const LindbladModel& model, int order, bool force_general) {
  const Eigensystem eig = build_eigensystem(model);
  if (!force_general && eig.commuting) {
    return perturb_commuting(eig, model.h1, model.jumps, order, model.lambda);
  }
  return perturb_general(eig, model.h1, model.jumps, order, model.lambda);
}

double SqueezingClosedForm::re_f(double theta) const {
  const double denom = beta * beta + gamma * gamma;
  return alpha * (beta * std::cos(2.0 * theta) - gamma * std::sin(2.0 * theta)) / denom;
}

namespace {

double reduce_angle(double theta) {
  const double pi = std::numbers::pi;
  double reduced = std::fmod(theta, pi);
  if (reduced < 0.0) reduced += pi;
  if (reduced >= pi) reduced -= pi;
  return reduced;
}

SqueezingClosedForm finish_closed_form(int n, double alpha, double beta, double gamma,
                                       double coupling_to_phi2, double zeta, double zeta_prime) {
  if (n < 3) fail(ErrorCode::InvalidArgument, "closed form: N >= 3 required");
  SqueezingClosedForm cf;
  cf.n = n;
  cf.alpha = alpha;
  cf.beta = beta;
  cf.gamma = gamma;
  const double denom = std::hypot(beta, gamma);
  if (denom == 0.0) {
    if (alpha != 0.0) fail(ErrorCode::InvalidArgument, "closed form: vanishing denominator beta = gamma = 0");
    cf.re_f_extremal = 0.0;
    cf.theta_squeeze = std::numeric_limits<double>::quiet_NaN();
    cf.theta_anti = std::numeric_limits<double>::quiet_NaN();
    cf.first_order_coeff = cplx(0.0);
    cf.zeta = 0.0;
    cf.zeta_prime = 0.0;
    cf.zeta_prime_dissipative = 0.0;
    return cf;
  }
  cf.re_f_extremal = std::abs(alpha) / denom;
  if (alpha == 0.0) {
    cf.theta_squeeze = std::numeric_limits<double>::quiet_NaN();
    cf.theta_anti = std::numeric_limits<double>::quiet_NaN();
  } else {
    // d/dtheta Re F = 0 at 2 theta = -atan2(gamma, beta) mod pi; the branch
    // with Re F > 0 needs the extra pi/2 when alpha < 0.
    double theta = -0.5 * std::atan2(gamma, beta);
    if (alpha < 0.0) theta += 0.5 * std::numbers::pi;
    cf.theta_squeeze = reduce_angle(theta);
    cf.theta_anti = reduce_angle(cf.theta_squeeze + 0.5 * std::numbers::pi);
  }
  cf.first_order_coeff = -coupling_to_phi2 / cplx(beta, -gamma);
  cf.zeta = zeta;
  cf.zeta_prime = zeta_prime;
  cf.zeta_prime_dissipative =
      cf.first_order_coeff.real() / std::sqrt(2.0 * n * (n - 1.0));
  return cf;
}

}  // namespace

SqueezingClosedForm xyz_closed_form(int n, double jx, double jy, double jz, double gamma) {
  const double j_mean = 0.5 * (jx + jy);
  const double j_delta = 0.5 * (jx - jy);
  const double alpha = 0.25 * (n - 1) * j_delta;
  const double beta = 2.0 * (n - 2) * (j_mean - jz) / n;
  const double coupling = 0.5 * j_delta * std::sqrt(2.0 * (n - 1.0) / n);
  // The dissipation-free amplitude diverges on the J = Jz line; the complex
  // first_order_coeff stays regular through it.
  const double zeta = j_mean == jz
                          ? std::numeric_limits<double>::quiet_NaN()
                          : -std::sqrt(2.0 * n * (n - 1.0)) / (4.0 * (n - 2)) * j_delta / (j_mean - jz);
  const double zeta_prime = j_mean == jz ? std::numeric_limits<double>::quiet_NaN()
                                         : -j_delta / (4.0 * (n - 2) * (j_mean - jz));
  return finish_closed_form(n, alpha, beta, gamma, coupling, zeta, zeta_prime);
}

SqueezingClosedForm tfi_closed_form(int n, double jx, double delta, double gamma) {
  const double alpha = 0.125 * jx * (n - 1);
  const double beta = 2.0 * delta;
  const double coupling = 0.25 * jx * std::sqrt(2.0 * (n - 1.0) / n);
  const double zeta = delta == 0.0 ? std::numeric_limits<double>::quiet_NaN() : -coupling / beta;
  const double zeta_prime =
      delta == 0.0 ? std::numeric_limits<double>::quiet_NaN() : zeta / std::sqrt(2.0 * n * (n - 1.0));
  return finish_closed_form(n, alpha, beta, gamma, coupling, zeta, zeta_prime);
}

double DickeObservables::xi2(double theta) const {
  const double s = std::sin(theta);
  const double c = std::cos(theta);
  return 1.0 + 2.0 * drive_ratio_sq_ * (s * s - c * c);
}

DickeObservables dicke_observables(int n, double omega, double big_gamma) {
  if (n < 1 || big_gamma <= 0.0) fail(ErrorCode::InvalidArgument, "dicke_observables: bad parameters");
  const double r = omega / big_gamma;
  const double r2 = r * r;
  const double nn = n;
  DickeObservables o;
  o.jx = 0.0;
  o.jy = -r * nn;
  o.jz = -0.5 * nn + r2 * nn;
  o.jz_mean_sq = 0.25 * nn * nn - r2 * nn * nn;
  o.jx_sq = 0.25 * nn - 0.5 * r2 * nn;
  o.jy_sq = 0.25 * nn + 0.5 * r2 * nn * (2.0 * nn - 1.0);
  o.jz_sq = 0.25 * nn * nn - r2 * nn * (nn - 1.0);
  o.sym_xy = 0.0;
  o.sym_xz = 0.0;
  o.sym_yz = r * nn * (nn - 1.0);
  o.cos_phi = -2.0 * r;
  o.sin_phi = -(1.0 - 2.0 * r2);
  o.drive_ratio_sq_ = r2;
  return o;
}

}  // namespace sqz
