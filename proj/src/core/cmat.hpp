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

#pragma once

#include <complex>
#include <variant>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

namespace sqz {

using cplx = std::complex<double>;
using DenseMat = Eigen::MatrixXcd;
using SparseMat = Eigen::SparseMatrix<cplx>;
using Triplet = Eigen::Triplet<cplx>;
using Vec = Eigen::VectorXcd;
using RealVec = Eigen::VectorXd;
using Index = Eigen::Index;

// Matrices at or above this dimension are stored sparse by default.
inline constexpr Index kDenseCrossover = 64;

enum class Storage { Auto, Dense, Sparse };

// Square complex matrix with dense or sparse backing. Value semantics; the
// backing is picked once at construction and binary operations promote to
// sparse whenever either side is sparse.
class CMat {
 public:
  CMat() : mat_(DenseMat::Zero(0, 0)) {}
  explicit CMat(DenseMat m) : mat_(std::move(m)) {}
  explicit CMat(SparseMat m) : mat_(std::move(m)) { std::get<SparseMat>(mat_).makeCompressed(); }

  static CMat zero(Index dim, Storage storage = Storage::Auto);
  static CMat identity(Index dim, Storage storage = Storage::Auto);
  static CMat from_triplets(Index dim, const std::vector<Triplet>& entries,
                            Storage storage = Storage::Auto);

  Index dim() const;
  bool is_dense() const { return std::holds_alternative<DenseMat>(mat_); }
  Index nonzeros() const;

  const DenseMat& dense_ref() const { return std::get<DenseMat>(mat_); }
  const SparseMat& sparse_ref() const { return std::get<SparseMat>(mat_); }
  DenseMat to_dense() const;
  SparseMat to_sparse() const;

  cplx coeff(Index row, Index col) const;

  CMat adjoint() const;
  CMat transpose() const;
  CMat conjugate() const;
  cplx trace() const;
  double max_abs() const;

  Vec apply(const Vec& x) const;

  CMat& operator+=(const CMat& other);
  CMat& operator-=(const CMat& other);
  CMat& operator*=(cplx factor);

  friend CMat operator+(CMat a, const CMat& b) { return a += b; }
  friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
  friend CMat operator*(cplx factor, CMat a) { return a *= factor; }
  friend CMat operator*(CMat a, cplx factor) { return a *= factor; }
  friend CMat operator*(const CMat& a, const CMat& b);

 private:
  std::variant<DenseMat, SparseMat> mat_;
};

// Kronecker product; the result is sparse when either factor is sparse or the
// result dimension reaches the crossover.
CMat kron(const CMat& a, const CMat& b);

// Max-norm of (A - A^dagger); cheap Hermiticity measure.
double hermiticity_defect(const CMat& a);

}  // namespace sqz
