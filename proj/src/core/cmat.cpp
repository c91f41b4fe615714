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

#include "core/cmat.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include "core/errors.hpp"

namespace sqz {

namespace {

bool pick_dense(Index dim, Storage storage) {
  switch (storage) {
    case Storage::Dense:
      return true;
    case Storage::Sparse:
      return false;
    case Storage::Auto:
    default:
      return dim < kDenseCrossover;
  }
}

}  // namespace

CMat CMat::zero(Index dim, Storage storage) {
  if (pick_dense(dim, storage)) return CMat(DenseMat::Zero(dim, dim));
  return CMat(SparseMat(dim, dim));
}

CMat CMat::identity(Index dim, Storage storage) {
  if (pick_dense(dim, storage)) return CMat(DenseMat::Identity(dim, dim));
  SparseMat id(dim, dim);
  id.setIdentity();
  return CMat(std::move(id));
}

CMat CMat::from_triplets(Index dim, const std::vector<Triplet>& entries, Storage storage) {
  SparseMat m(dim, dim);
  m.setFromTriplets(entries.begin(), entries.end());
  if (pick_dense(dim, storage)) return CMat(DenseMat(m));
  return CMat(std::move(m));
}

Index CMat::dim() const {
  return is_dense() ? dense_ref().rows() : sparse_ref().rows();
}

Index CMat::nonzeros() const {
  return is_dense() ? dense_ref().size() : sparse_ref().nonZeros();
}

DenseMat CMat::to_dense() const {
  return is_dense() ? dense_ref() : DenseMat(sparse_ref());
}

SparseMat CMat::to_sparse() const {
  if (is_dense()) {
    SparseMat m = dense_ref().sparseView();
    m.makeCompressed();
    return m;
  }
  return sparse_ref();
}

cplx CMat::coeff(Index row, Index col) const {
  return is_dense() ? dense_ref()(row, col) : sparse_ref().coeff(row, col);
}

CMat CMat::adjoint() const {
  if (is_dense()) return CMat(DenseMat(dense_ref().adjoint()));
  return CMat(SparseMat(sparse_ref().adjoint()));
}

CMat CMat::transpose() const {
  if (is_dense()) return CMat(DenseMat(dense_ref().transpose()));
  return CMat(SparseMat(sparse_ref().transpose()));
}

CMat CMat::conjugate() const {
  if (is_dense()) return CMat(DenseMat(dense_ref().conjugate()));
  return CMat(SparseMat(sparse_ref().conjugate()));
}

cplx CMat::trace() const {
  if (is_dense()) return dense_ref().trace();
  cplx sum = 0.0;
  const SparseMat& m = sparse_ref();
  for (Index k = 0; k < m.outerSize(); ++k) {
    for (SparseMat::InnerIterator it(m, k); it; ++it) {
      if (it.row() == it.col()) sum += it.value();
    }
  }
  return sum;
}

double CMat::max_abs() const {
  if (is_dense()) return dense_ref().size() == 0 ? 0.0 : dense_ref().cwiseAbs().maxCoeff();
  double best = 0.0;
  const SparseMat& m = sparse_ref();
  for (Index k = 0; k < m.outerSize(); ++k) {
    for (SparseMat::InnerIterator it(m, k); it; ++it) best = std::max(best, std::abs(it.value()));
  }
  return best;
}

Vec CMat::apply(const Vec& x) const {
  if (x.size() != dim()) fail(ErrorCode::Dimension, "CMat::apply: vector length mismatch");
  if (is_dense()) return dense_ref() * x;
  return sparse_ref() * x;
}

CMat& CMat::operator+=(const CMat& other) {
  if (dim() != other.dim()) fail(ErrorCode::Dimension, "CMat: dimension mismatch in +");
  if (is_dense() && other.is_dense()) {
    std::get<DenseMat>(mat_) += other.dense_ref();
  } else {
    mat_ = SparseMat(to_sparse() + other.to_sparse());
  }
  return *this;
}

CMat& CMat::operator-=(const CMat& other) {
  if (dim() != other.dim()) fail(ErrorCode::Dimension, "CMat: dimension mismatch in -");
  if (is_dense() && other.is_dense()) {
    std::get<DenseMat>(mat_) -= other.dense_ref();
  } else {
    mat_ = SparseMat(to_sparse() - other.to_sparse());
  }
  return *this;
}

CMat& CMat::operator*=(cplx factor) {
  if (is_dense()) {
    std::get<DenseMat>(mat_) *= factor;
  } else {
    std::get<SparseMat>(mat_) *= factor;
  }
  return *this;
}

CMat operator*(const CMat& a, const CMat& b) {
  if (a.dim() != b.dim()) fail(ErrorCode::Dimension, "CMat: dimension mismatch in *");
  if (a.is_dense() && b.is_dense()) return CMat(DenseMat(a.dense_ref() * b.dense_ref()));
  return CMat(SparseMat(a.to_sparse() * b.to_sparse()));
}

CMat kron(const CMat& a, const CMat& b) {
  const Index dim = a.dim() * b.dim();
  if (a.is_dense() && b.is_dense() && dim < kDenseCrossover) {
    return CMat(DenseMat(Eigen::kroneckerProduct(a.dense_ref(), b.dense_ref())));
  }
  SparseMat as = a.to_sparse();
  SparseMat bs = b.to_sparse();
  SparseMat out(dim, dim);
  out = Eigen::kroneckerProduct(as, bs);
  out.makeCompressed();
  return CMat(std::move(out));
}

double hermiticity_defect(const CMat& a) {
  return (a - a.adjoint()).max_abs();
}

}  // namespace sqz
