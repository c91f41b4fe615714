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
#include "core/sites.hpp"

namespace sqz {

// Benchmark models. Couplings are quoted in units of the decay rate, which is
// gamma for individually emitting models and Gamma for the collectively
// emitting one; pass 1.0 for those fields to work in natural units.

struct XyzParams {
  int n = 0;
  double jx = 0.0, jy = 0.0, jz = 0.0;
  double gamma = 1.0;

  double j_mean() const { return 0.5 * (jx + jy); }
  double j_delta() const { return 0.5 * (jx - jy); }
};

struct TfiParams {
  int n = 0;
  double jx = 0.0;
  double delta = 0.0;
  double gamma = 1.0;
};

struct DickeParams {
  int n = 0;
  double omega = 0.0;
  double big_gamma = 1.0;
};

enum class Backend {
  Full,   // tensor-product space, individual jump operators, exact Liouvillian
  Dicke,  // maximal J = N/2 manifold; for individually emitting models the
          // jumps are symmetric-sector representatives (perturbation only)
};

enum class ModelKind { Xyz, Tfi, DrivenDicke };

struct ModelBundle {
  ModelKind kind;
  LindbladModel model;
  CollectiveOps collective;
  std::optional<SiteOperatorSet> sites;  // Full backend only
};

// H = H0 + lambda H1 with
//   H0 = (J/N) [(J^x)^2 + (J^y)^2] + (Jz/N) (J^z)^2,
//   lambda H1 = (dJ/2N) [(J^+)^2 + (J^-)^2],  lambda folded to 1,
// and individual emission S_i^- at rate gamma. The full-backend Hamiltonian
// equals (1/N) sum_ij (Jx Sx Sx + Jy Sy Sy + Jz Sz Sz) entrywise, diagonal
// i = j terms included.
ModelBundle build_xyz(const XyzParams& params, Backend backend);

//   H0 = Delta J^z,  lambda H1 = (Jx/4N) [(J^+)^2 + (J^-)^2 + J^+J^- + J^-J^+].
ModelBundle build_tfi(const TfiParams& params, Backend backend);

//   H0 = 0,  lambda H1 = -Omega J^x,  single collective jump J^- at rate Gamma/N.
ModelBundle build_dicke(const DickeParams& params);

}  // namespace sqz
