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

#include "core/sites.hpp"
#include "core/states.hpp"

namespace sqz {

// Collective-spin squeezing analysis in the frame of the mean spin.
//
// e1 is the x axis projected orthogonal to the mean-spin direction (falling
// back to y when the spin points along x) and e2 = e1 x n_mean, so that for a
// spin along -z the pair is (x, y) and transverse angles are measured as in
// the x-y plane. theta_min is the angle of the minimal-variance direction,
// reported in [0, pi).
struct SqueezingReport {
  Eigen::Vector3d mean_spin;
  Eigen::Vector3d e1, e2;
  Eigen::Matrix2d covariance;
  double var_min = 0.0, var_max = 0.0;
  double xi2 = 0.0;        // N * var_min / |<J>|^2
  double theta_min = 0.0;
  double xi2_anti = 0.0;   // N * var_max / |<J>|^2
  double qfi_anti = 0.0;   // QFI of the maximal-variance transverse generator
  double uncertainty_product = 0.0;  // var_min * var_max / (|<J>|^2 / 4)
};

SqueezingReport squeezing_report(const DensityMatrix& state, const CollectiveOps& ops);
SqueezingReport squeezing_report(const PureState& state, const CollectiveOps& ops);

// Quantum Fisher information for rotations generated by a Hermitian operator:
// pure states give 4 Var(G); mixed states use the spectral formula
// 2 sum_{kl} (p_k - p_l)^2 / (p_k + p_l) |<k|G|l>|^2 with eigenvalue pairs
// below 1e-12 dropped.
double qfi(const PureState& state, const Operator& generator);
double qfi(const DensityMatrix& state, const Operator& generator);

// Transverse-plane variance minimization by brute-force angle scan; slower
// cross-check of the covariance eigendecomposition route.
double scan_theta_min(const DensityMatrix& state, const CollectiveOps& ops, double step_deg = 0.5);

struct PairCorrelations {
  double sxsx = 0.0;       // <S_i^x S_j^x>, i != j
  double sysy = 0.0;
  double max_pair_dev = 0.0;  // spread across site pairs; 0 for symmetric states
};

PairCorrelations pair_correlations(const DensityMatrix& state, const SiteOperatorSet& sites);
PairCorrelations pair_correlations(const PureState& state, const SiteOperatorSet& sites);

}  // namespace sqz
