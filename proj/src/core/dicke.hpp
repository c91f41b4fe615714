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

#include "core/operator.hpp"

namespace sqz {

// Ladder amplitudes sqrt(J(J+1) - M(M+1)) for M = -J ... J-1, indexed by the
// position of M in the ascending label order. Symmetric under M -> -M-1.
struct DickeLadderTable {
  double spin_length = 0.0;
  std::vector<double> coeff_plus;

  static DickeLadderTable build(double spin_length);
};

struct CollectiveOps {
  Operator jx, jy, jz, jplus, jminus;
};

// Collective spin operators on the (2J+1)-dimensional manifold. Default spin
// length is the maximal one, J = N/2.
CollectiveOps collective_ops(int emitters, double spin_length);
CollectiveOps collective_ops(int emitters);

// Eigenvalue of the all-to-all XXZ Hamiltonian
//   H0 = (J_mean/N) [ (J^x)^2 + (J^y)^2 ] + (Jz_coupling/N) (J^z)^2
// on the Dicke state |J,M>:  E = (J_mean/N) J(J+1) + (Jz_coupling - J_mean)/N * M^2.
double dicke_xxz_energy(int emitters, double j_mean, double jz_coupling, double spin_length,
                        double m);

}  // namespace sqz
