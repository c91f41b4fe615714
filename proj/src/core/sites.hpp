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

#include "core/dicke.hpp"
#include "core/operator.hpp"

namespace sqz {

// Single-site spin-1/2 operators embedded into the N-emitter tensor space.
// All matrices are kept sparse; N is capped at 12 (the Liouvillian at N = 8 is
// already the practical full-space solve ceiling).
struct SiteOps {
  Operator sx, sy, sz, splus, sminus;
};

class SiteOperatorSet {
 public:
  static SiteOperatorSet build(int emitters);

  int emitters() const { return emitters_; }
  const HilbertBasis& basis() const { return basis_; }
  const SiteOps& site(int i) const;

  // Sum_i S_i^alpha assembled as collective operators on the tensor space.
  CollectiveOps collective() const;

 private:
  SiteOperatorSet(int emitters, HilbertBasis basis) : emitters_(emitters), basis_(std::move(basis)) {}

  int emitters_;
  HilbertBasis basis_;
  std::vector<SiteOps> sites_;
};

// Isometry V from the maximal Dicke manifold (J = N/2, ascending M) into the
// tensor space: |N/2, M> maps to the normalized symmetric superposition of all
// bit strings with N/2 + M up spins. Satisfies V^dagger V = 1.
SparseMat symmetric_isometry(int emitters);

}  // namespace sqz
