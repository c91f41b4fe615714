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

#include "core/states.hpp"

#include <Eigen/Eigenvalues>

#include "core/errors.hpp"

namespace sqz {

namespace {

constexpr double kTraceTol = 1e-10;
constexpr double kHermTol = 1e-10;
constexpr double kPositivityTol = 1e-8;
constexpr double kNormalizedTol = 1e-8;

StateDiagnostics measure(const DenseMat& rho) {
  StateDiagnostics d;
  d.trace_dev = std::abs(rho.trace() - cplx(1.0, 0.0));
  d.herm_dev = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const DenseMat herm = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMat> es(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  d.purity = (herm * herm).trace().real();
  return d;
}

}  // namespace

PureState::PureState(HilbertBasis basis, Vec amplitudes)
    : basis_(std::move(basis)), amp_(std::move(amplitudes)) {
  if (amp_.size() != basis_.dimension()) {
    fail(ErrorCode::Dimension, "PureState: amplitude length does not match basis");
  }
}

PureState PureState::normalized() const {
  const double n = amp_.norm();
  if (n == 0.0) fail(ErrorCode::InvalidArgument, "PureState: cannot normalize zero vector");
  return PureState(basis_, amp_ / n);
}

DensityMatrix::DensityMatrix(HilbertBasis basis, DenseMat rho)
    : basis_(std::move(basis)), rho_(std::move(rho)) {
  if (rho_.rows() != rho_.cols() || rho_.rows() != basis_.dimension()) {
    fail(ErrorCode::Dimension, "DensityMatrix: matrix side does not match basis dimension");
  }
  diag_ = measure(rho_);
}

DensityMatrix DensityMatrix::pure(const PureState& psi) {
  const Vec a = psi.normalized().amplitudes();
  return DensityMatrix(psi.basis(), a * a.adjoint());
}

DensityMatrix DensityMatrix::cleaned() const {
  DenseMat herm = 0.5 * (rho_ + rho_.adjoint());
  const double tr = herm.trace().real();
  if (std::abs(tr) < 1e-300) fail(ErrorCode::InvalidArgument, "DensityMatrix: zero trace");
  herm /= tr;
  return DensityMatrix(basis_, std::move(herm));
}

void DensityMatrix::validate() const {
  if (diag_.trace_dev >= kTraceTol) {
    fail(ErrorCode::NotNormalized, "density matrix trace deviates by " + std::to_string(diag_.trace_dev));
  }
  if (diag_.herm_dev >= kHermTol) {
    fail(ErrorCode::NotHermitian, "density matrix Hermiticity defect " + std::to_string(diag_.herm_dev));
  }
  if (diag_.min_eigenvalue <= -kPositivityTol) {
    fail(ErrorCode::SolverFailure,
         "density matrix has eigenvalue " + std::to_string(diag_.min_eigenvalue));
  }
}

void DensityMatrix::set_solver_info(double residual, bool unique, bool uniqueness_checked) {
  diag_.residual = residual;
  diag_.unique = unique;
  diag_.uniqueness_checked = uniqueness_checked;
}

cplx expectation(const Operator& op, const PureState& psi) {
  require_same_basis(op.basis(), psi.basis(), "expectation");
  if (std::abs(psi.norm() - 1.0) > kNormalizedTol) {
    fail(ErrorCode::NotNormalized, "expectation: pure state is not normalized");
  }
  const Vec& a = psi.amplitudes();
  const cplx value = a.dot(op.matrix().apply(a));  // Eigen dot conjugates the left factor
  if (op.hermitian_hint() && std::abs(value.imag()) >= 1e-10) {
    fail(ErrorCode::NotHermitian,
         "expectation: imaginary part " + std::to_string(value.imag()) + " on hermitian operator");
  }
  return value;
}

cplx expectation(const Operator& op, const DensityMatrix& rho) {
  require_same_basis(op.basis(), rho.basis(), "expectation");
  if (rho.diagnostics().trace_dev > kNormalizedTol) {
    fail(ErrorCode::NotNormalized, "expectation: density matrix trace is not 1");
  }
  cplx value;
  if (op.matrix().is_dense()) {
    value = (op.matrix().dense_ref() * rho.matrix()).trace();
  } else {
    // Tr(A rho) accumulated over the nonzeros of A.
    const SparseMat& a = op.matrix().sparse_ref();
    cplx sum = 0.0;
    for (Index k = 0; k < a.outerSize(); ++k) {
      for (SparseMat::InnerIterator it(a, k); it; ++it) sum += it.value() * rho.matrix()(it.col(), it.row());
    }
    value = sum;
  }
  if (op.hermitian_hint() && std::abs(value.imag()) >= 1e-10) {
    fail(ErrorCode::NotHermitian,
         "expectation: imaginary part " + std::to_string(value.imag()) + " on hermitian operator");
  }
  return value;
}

Vec vectorize(const DensityMatrix& rho) { return vectorize(rho.matrix()); }

DensityMatrix devectorize(const Vec& v, const HilbertBasis& basis) {
  DenseMat m = devectorize(v);
  if (m.rows() != basis.dimension()) {
    fail(ErrorCode::Dimension, "devectorize: length does not match basis dimension");
  }
  return DensityMatrix(basis, std::move(m));
}

}  // namespace sqz
