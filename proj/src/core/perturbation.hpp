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

#include "core/lindblad.hpp"

namespace sqz {

// Eigenbasis of H0, refined inside degenerate eigenspaces so that the summed
// dissipator D = sum_j rate_j L_j^dag L_j is simultaneously diagonalized
// whenever [H0, D] = 0. The dark reference state (the one annihilated by every
// jump operator) is located at index0.
struct Eigensystem {
  HilbertBasis basis;
  RealVec energies;
  DenseMat states;          // orthonormal eigenvectors in columns
  Index index0 = 0;
  Vec dissipator_diag;      // <n| D |n>
  DenseMat dissipator_eig;  // V^dag D V, used by the general engine
  bool commuting = false;   // max-norm of [H0, D] below 1e-10

  // Complex unperturbed energy E_n - (i/2) <D>_n relative to the reference:
  // the denominators of the closed-form corrections.
  cplx nh_energy_gap(Index n) const;
};

Eigensystem build_eigensystem(const LindbladModel& model);

// Pure steady-state corrections |phi'> = |phi0> + lambda |psi1> + lambda^2 |psi2>.
// Coefficient vectors c and d are stored in eigenbasis order; c[index0] = 0 and
// d[index0] = -<psi1|psi1>/2 carries the normalization counterterm.
struct PerturbedState {
  HilbertBasis basis;
  Vec phi0, psi1, psi2;
  double lambda = 1.0;
  int order = 2;
  Vec c, d;
  Index index0 = 0;

  Vec assembled() const { return assembled(lambda); }
  Vec assembled(double lambda_value) const;
  PureState state() const { return state(lambda); }
  PureState state(double lambda_value) const;
};

// Coupled-coefficient route: solves the full linear systems for c and d with
// the dissipator matrix kept in general (possibly non-diagonal) form.
PerturbedState perturb_general(const Eigensystem& eig, const Operator& h1,
                               const std::vector<Jump>& jumps, int order, double lambda = 1.0);

// Closed-form route, valid when [H0, D] = 0: first order
//   |psi1> = - sum_{n != 0} <n|H1|0> / (<H0NH>_n - E0) |n>,
// and the four-term second-order expression including the jump-operator term.
PerturbedState perturb_commuting(const Eigensystem& eig, const Operator& h1,
                                 const std::vector<Jump>& jumps, int order, double lambda = 1.0);

PerturbedState perturb(const LindbladModel& model, int order, bool force_general = false);

// First-order squeezing closed forms shared by the XYZ and TFI models:
// F(theta) = alpha e^{2 i theta} / (beta - i gamma).
struct SqueezingClosedForm {
  int n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double theta_squeeze = 0.0;   // extremal angle with Re F > 0, in [0, pi)
  double theta_anti = 0.0;      // orthogonal transverse angle, in [0, pi)
  double re_f_extremal = 0.0;   // |alpha| / sqrt(beta^2 + gamma^2)
  double zeta = 0.0;            // two-Dicke-state amplitude, dissipation-free form
  double zeta_prime = 0.0;      // pair correlator zeta / sqrt(2N(N-1))
  cplx first_order_coeff;       // amplitude on |M = -N/2+2> including -i gamma
  double zeta_prime_dissipative = 0.0;  // Re(first_order_coeff) / sqrt(2N(N-1))

  double re_f(double theta) const;
  double xi2_first_order() const { return 1.0 - (8.0 / n) * re_f_extremal; }
  double xi2_first_order(double theta) const { return 1.0 - (8.0 / n) * re_f(theta); }
};

SqueezingClosedForm xyz_closed_form(int n, double jx, double jy, double jz, double gamma);
SqueezingClosedForm tfi_closed_form(int n, double jx, double delta, double gamma);

// Second-order expectation values of the driven Dicke model.
struct DickeObservables {
  double jx = 0.0, jy = 0.0, jz = 0.0;
  double jz_mean_sq = 0.0;          // <J^z>^2 evaluated to the same order
  double jx_sq = 0.0, jy_sq = 0.0, jz_sq = 0.0;
  double sym_xy = 0.0, sym_xz = 0.0, sym_yz = 0.0;
  double cos_phi = 0.0, sin_phi = 0.0;  // mean-spin direction (0, cos, sin)

  // 1 + (2 Omega^2/Gamma^2)(sin^2 theta - cos^2 theta); minimal at theta = 0.
  double xi2(double theta) const;
  double xi2_min() const { return xi2(0.0); }

 private:
  friend DickeObservables dicke_observables(int, double, double);
  double drive_ratio_sq_ = 0.0;
};

DickeObservables dicke_observables(int n, double omega, double big_gamma);

}  // namespace sqz
