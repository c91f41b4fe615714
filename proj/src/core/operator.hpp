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

#include "core/basis.hpp"
#include "core/cmat.hpp"

namespace sqz {

inline constexpr double kHermitianTol = 1e-12;

// Linear operator on a labelled Hilbert space. hermitian_hint is verified on
// construction (max-norm of A - A^dagger below 1e-12).
class Operator {
 public:
  Operator(HilbertBasis basis, CMat matrix, bool hermitian_hint = false);

  const HilbertBasis& basis() const { return basis_; }
  const CMat& matrix() const { return mat_; }
  bool hermitian_hint() const { return hermitian_hint_; }
  Index dim() const { return mat_.dim(); }

  Operator dagger() const { return Operator(basis_, mat_.adjoint(), hermitian_hint_); }

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(cplx factor, const Operator& a);

 private:
  HilbertBasis basis_;
  CMat mat_;
  bool hermitian_hint_;
};

void require_same_basis(const HilbertBasis& a, const HilbertBasis& b, const char* where);

// ab - ba.
Operator commutator(const Operator& a, const Operator& b);

// Column-stacking vectorization: vec index = col*dim + row, so that
// vec(A rho B) = (B^T kron A) vec(rho). Used consistently by every
// superoperator in the library.
Vec vectorize(const DenseMat& rho);
DenseMat devectorize(const Vec& v);

}  // namespace sqz
