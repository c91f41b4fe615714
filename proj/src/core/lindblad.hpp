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

#include <optional>
#include <vector>

#include "core/states.hpp"

namespace sqz {

struct Jump {
  Operator op;
  double rate;  // gamma_j >= 0
};

// Description of the generator
//   d rho/dt = -i [H0 + lambda H1, rho] + sum_j rate_j D(L_j)[rho].
//
// dissipator_sum holds sum_j rate_j L_j^dagger L_j. For models solved inside a
// restricted manifold the listed jumps may be in-manifold representatives that
// do not generate the dissipation exactly; jumps_generate_dissipator is false
// in that case and the exact Liouvillian is unavailable.
struct LindbladModel {
  HilbertBasis basis;
  Operator h0;
  Operator h1;
  double lambda = 1.0;
  std::vector<Jump> jumps;
  Operator dissipator_sum;
  bool jumps_generate_dissipator = true;
  bool u1_symmetric = false;
};

LindbladModel make_model(HilbertBasis basis, Operator h0, Operator h1, double lambda,
                         std::vector<Jump> jumps,
                         std::optional<Operator> dissipator_sum = std::nullopt,
                         const Operator* jz_for_u1_check = nullptr);

// Full superoperator of the generator under column-stacking vectorization:
//   L = -i (1 kron H - H^T kron 1)
//     + sum_j rate_j [ conj(L_j) kron L_j
//                      - 1/2 (1 kron L_j^dag L_j) - 1/2 ((L_j^dag L_j)^T kron 1) ].
CMat liouvillian(const LindbladModel& model);

struct SolverOptions {
  double tol = 1e-10;              // residual target, scaled by the Hilbert dimension
  int max_iterations = 20000;      // iterative fallback budget
  Index dense_cap = 4096;          // largest superoperator side solved densely
  Index max_dimension = 512;       // largest Hilbert dimension accepted at all
  bool check_uniqueness = true;    // second-smallest singular value check (dense path only)
  double uniqueness_tol = 1e-8;
};

// Solves L[rho] = 0 with Tr rho = 1. Dense null-space extraction via SVD below
// dense_cap; above it, a sparse direct solve of the trace-bordered system with
// an iterative least-squares fallback. Hermitizes and trace-normalizes the
// result and records the residual ||L vec(rho)||_2 in the diagnostics.
DensityMatrix steady_state(const LindbladModel& model, const SolverOptions& options = {});

}  // namespace sqz
