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

#include <limits>

#include "core/operator.hpp"

namespace sqz {

struct StateDiagnostics {
  double trace_dev = std::numeric_limits<double>::quiet_NaN();
  double herm_dev = std::numeric_limits<double>::quiet_NaN();
  double min_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  double purity = std::numeric_limits<double>::quiet_NaN();
  // Solver metadata; NaN / defaults when the state was built directly.
  double residual = std::numeric_limits<double>::quiet_NaN();
  bool unique = true;
  bool uniqueness_checked = false;
};

class PureState {
 public:
  PureState(HilbertBasis basis, Vec amplitudes);

  const HilbertBasis& basis() const { return basis_; }
  const Vec& amplitudes() const { return amp_; }
  double norm() const { return amp_.norm(); }
  PureState normalized() const;

 private:
  HilbertBasis basis_;
  Vec amp_;
};

class DensityMatrix {
 public:
  // Stores the matrix as given; diagnostics are measured on it, nothing is
  // silently repaired. Use cleaned() for a Hermitized, trace-normalized copy.
  DensityMatrix(HilbertBasis basis, DenseMat rho);

  static DensityMatrix pure(const PureState& psi);

  const HilbertBasis& basis() const { return basis_; }
  const DenseMat& matrix() const { return rho_; }
  const StateDiagnostics& diagnostics() const { return diag_; }

  DensityMatrix cleaned() const;

  // Throws unless trace deviation < 1e-10, Hermiticity defect < 1e-10 and the
  // smallest eigenvalue exceeds -1e-8.
  void validate() const;

  void set_solver_info(double residual, bool unique, bool uniqueness_checked);

 private:
  HilbertBasis basis_;
  DenseMat rho_;
  StateDiagnostics diag_;
};

cplx expectation(const Operator& op, const PureState& psi);
cplx expectation(const Operator& op, const DensityMatrix& rho);

Vec vectorize(const DensityMatrix& rho);
DensityMatrix devectorize(const Vec& v, const HilbertBasis& basis);

}  // namespace sqz
