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

#include "core/operator.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace sqz {

Operator::Operator(HilbertBasis basis, CMat matrix, bool hermitian_hint)
    : basis_(std::move(basis)), mat_(std::move(matrix)), hermitian_hint_(hermitian_hint) {
  if (mat_.dim() != basis_.dimension()) {
    fail(ErrorCode::Dimension, "Operator: matrix side does not match basis dimension");
  }
  if (hermitian_hint_) {
    const double defect = hermiticity_defect(mat_);
    if (defect >= kHermitianTol) {
      fail(ErrorCode::NotHermitian,
           "Operator: hermitian_hint set but max-norm defect is " + std::to_string(defect));
    }
  }
}

void require_same_basis(const HilbertBasis& a, const HilbertBasis& b, const char* where) {
  if (a != b) {
    fail(ErrorCode::BasisMismatch,
         std::string(where) + ": basis mismatch (" + a.describe() + " vs " + b.describe() + ")");
  }
}

Operator operator+(const Operator& a, const Operator& b) {
  require_same_basis(a.basis_, b.basis_, "Operator+");
  return Operator(a.basis_, a.mat_ + b.mat_, a.hermitian_hint_ && b.hermitian_hint_);
}

Operator operator-(const Operator& a, const Operator& b) {
  require_same_basis(a.basis_, b.basis_, "Operator-");
  return Operator(a.basis_, a.mat_ - b.mat_, a.hermitian_hint_ && b.hermitian_hint_);
}

Operator operator*(const Operator& a, const Operator& b) {
  require_same_basis(a.basis_, b.basis_, "Operator*");
  return Operator(a.basis_, a.mat_ * b.mat_, false);
}

Operator operator*(cplx factor, const Operator& a) {
  const bool keep_hint = a.hermitian_hint_ && std::imag(factor) == 0.0;
  return Operator(a.basis_, factor * a.mat_, keep_hint);
}

Operator commutator(const Operator& a, const Operator& b) {
  require_same_basis(a.basis(), b.basis(), "commutator");
  return Operator(a.basis(), a.matrix() * b.matrix() - b.matrix() * a.matrix(), false);
}

Vec vectorize(const DenseMat& rho) {
  if (rho.rows() != rho.cols()) fail(ErrorCode::Dimension, "vectorize: matrix not square");
  return Eigen::Map<const Vec>(rho.data(), rho.size());
}

DenseMat devectorize(const Vec& v) {
  const auto side = static_cast<Index>(std::llround(std::sqrt(static_cast<double>(v.size()))));
  if (side * side != v.size()) {
    fail(ErrorCode::Dimension, "devectorize: length is not a perfect square");
  }
  return Eigen::Map<const DenseMat>(v.data(), side, side);
}

}  // namespace sqz
