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

#include "core/squeezing.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "core/errors.hpp"

namespace sqz {

namespace {

constexpr double kMeanSpinFloor = 1e-6;

double reduce_pi(double theta) {
  const double pi = std::numbers::pi;
  double reduced = std::fmod(theta, pi);
  if (reduced < 0.0) reduced += pi;
  if (reduced >= pi) reduced -= pi;
  return reduced;
}

Operator direction_operator(const CollectiveOps& ops, const Eigen::Vector3d& dir) {
  return Operator(ops.jx.basis(),
                  dir.x() * ops.jx.matrix() + dir.y() * ops.jy.matrix() + dir.z() * ops.jz.matrix(),
                  true);
}

template <typename State>
SqueezingReport report_impl(const State& state, const CollectiveOps& ops) {
  SqueezingReport rep;
  rep.mean_spin = Eigen::Vector3d(expectation(ops.jx, state).real(),
                                  expectation(ops.jy, state).real(),
                                  expectation(ops.jz, state).real());
  const double j_norm = rep.mean_spin.norm();
  if (j_norm <= kMeanSpinFloor) {
    fail(ErrorCode::InvalidArgument,
         "squeezing_report: mean spin vanishes; transverse frame undefined");
  }
  const Eigen::Vector3d n_hat = rep.mean_spin / j_norm;

  // Transverse frame anchored to the x axis (the squeezing angle of the
  // collective models is quoted against x); falls back to y if degenerate.
  Eigen::Vector3d e1 = Eigen::Vector3d::UnitX() - Eigen::Vector3d::UnitX().dot(n_hat) * n_hat;
  if (e1.norm() < 1e-6) {
    e1 = Eigen::Vector3d::UnitY() - Eigen::Vector3d::UnitY().dot(n_hat) * n_hat;
  }
  e1.normalize();
  const Eigen::Vector3d e2 = e1.cross(n_hat).normalized();
  rep.e1 = e1;
  rep.e2 = e2;

  const Operator j1 = direction_operator(ops, e1);
  const Operator j2 = direction_operator(ops, e2);
  const double m1 = expectation(j1, state).real();
  const double m2 = expectation(j2, state).real();
  const double v11 = expectation(j1 * j1, state).real() - m1 * m1;
  const double v22 = expectation(j2 * j2, state).real() - m2 * m2;
  const double v12 = 0.5 * expectation(j1 * j2 + j2 * j1, state).real() - m1 * m2;
  rep.covariance << v11, v12, v12, v22;

  // Principal axes of the transverse quadratic form Q(theta).
  const double theta_max = 0.5 * std::atan2(2.0 * v12, v11 - v22);
  auto q = [&](double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    return v11 * c * c + v22 * s * s + 2.0 * v12 * s * c;
  };
  const double theta_min = theta_max + 0.5 * std::numbers::pi;
  rep.var_max = q(theta_max);
  rep.var_min = q(theta_min);
  rep.theta_min = reduce_pi(theta_min);

  const int n = ops.jx.basis().emitters();
  rep.xi2 = n * rep.var_min / (j_norm * j_norm);
  rep.xi2_anti = n * rep.var_max / (j_norm * j_norm);
  rep.uncertainty_product = rep.var_min * rep.var_max / (0.25 * j_norm * j_norm);

  const Eigen::Vector3d anti_dir = std::cos(theta_max) * e1 + std::sin(theta_max) * e2;
  rep.qfi_anti = qfi(state, direction_operator(ops, anti_dir));
  return rep;
}

void require_hermitian_generator(const Operator& generator) {
  if (!generator.hermitian_hint() && hermiticity_defect(generator.matrix()) >= 1e-10) {
    fail(ErrorCode::NotHermitian, "qfi: generator is not Hermitian");
  }
}

}  // namespace

SqueezingReport squeezing_report(const DensityMatrix& state, const CollectiveOps& ops) {
  require_same_basis(state.basis(), ops.jx.basis(), "squeezing_report");
  return report_impl(state, ops);
}

SqueezingReport squeezing_report(const PureState& state, const CollectiveOps& ops) {
  require_same_basis(state.basis(), ops.jx.basis(), "squeezing_report");
  return report_impl(state.normalized(), ops);
}

double qfi(const PureState& state, const Operator& generator) {
  require_same_basis(state.basis(), generator.basis(), "qfi");
  require_hermitian_generator(generator);
  const PureState psi = state.normalized();
  const double mean = expectation(generator, psi).real();
  const double second = expectation(generator * generator, psi).real();
  return 4.0 * (second - mean * mean);
}

double qfi(const DensityMatrix& state, const Operator& generator) {
  require_same_basis(state.basis(), generator.basis(), "qfi");
  require_hermitian_generator(generator);

  const DenseMat rho = 0.5 * (state.matrix() + state.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMat> es(rho);
  const RealVec p = es.eigenvalues();
  const DenseMat g = es.eigenvectors().adjoint() * generator.matrix().to_dense() * es.eigenvectors();

  const Index dim = p.size();
  double total = 0.0;
  for (Index k = 0; k < dim; ++k) {
    for (Index l = 0; l < dim; ++l) {
      const double weight = p(k) + p(l);
      if (weight <= 1e-12) continue;
      const double diff = p(k) - p(l);
      total += 2.0 * diff * diff / weight * std::norm(g(k, l));
    }
  }
  return total;
}

double scan_theta_min(const DensityMatrix& state, const CollectiveOps& ops, double step_deg) {
  require_same_basis(state.basis(), ops.jx.basis(), "scan_theta_min");
  if (step_deg <= 0.0) fail(ErrorCode::InvalidArgument, "scan_theta_min: step must be positive");
  const SqueezingReport frame = squeezing_report(state, ops);

  const double step = step_deg * std::numbers::pi / 180.0;
  double best_theta = 0.0;
  double best_var = std::numeric_limits<double>::infinity();
  for (double theta = 0.0; theta < std::numbers::pi; theta += step) {
    const Eigen::Vector3d dir = std::cos(theta) * frame.e1 + std::sin(theta) * frame.e2;
    const Operator j_dir = direction_operator(ops, dir);
    const double mean = expectation(j_dir, state).real();
    const double var = expectation(j_dir * j_dir, state).real() - mean * mean;
    if (var < best_var) {
      best_var = var;
      best_theta = theta;
    }
  }
  return best_theta;
}

namespace {

template <typename State>
PairCorrelations pair_impl(const State& state, const SiteOperatorSet& sites) {
  PairCorrelations out;
  bool first = true;
  for (int i = 0; i < sites.emitters(); ++i) {
    for (int j = i + 1; j < sites.emitters(); ++j) {
      const double xx = expectation(sites.site(i).sx * sites.site(j).sx, state).real();
      const double yy = expectation(sites.site(i).sy * sites.site(j).sy, state).real();
      if (first) {
        out.sxsx = xx;
        out.sysy = yy;
        first = false;
      }
      out.max_pair_dev = std::max({out.max_pair_dev, std::abs(xx - out.sxsx), std::abs(yy - out.sysy)});
    }
  }
  return out;
}

}  // namespace

PairCorrelations pair_correlations(const DensityMatrix& state, const SiteOperatorSet& sites) {
  if (state.basis().kind() != BasisKind::TensorProduct) {
    fail(ErrorCode::Unsupported,
         "pair_correlations: needs the tensor-product basis; derive from collective moments "
         "on a Dicke manifold");
  }
  require_same_basis(state.basis(), sites.basis(), "pair_correlations");
  return pair_impl(state, sites);
}

PairCorrelations pair_correlations(const PureState& state, const SiteOperatorSet& sites) {
  if (state.basis().kind() != BasisKind::TensorProduct) {
    fail(ErrorCode::Unsupported,
         "pair_correlations: needs the tensor-product basis; derive from collective moments "
         "on a Dicke manifold");
  }
  require_same_basis(state.basis(), sites.basis(), "pair_correlations");
  return pair_impl(state.normalized(), sites);
}

}  // namespace sqz
