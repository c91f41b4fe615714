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

#include "core/dicke.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace sqz {

DickeLadderTable DickeLadderTable::build(double spin_length) {
  const double two_j = 2.0 * spin_length;
  if (std::abs(two_j - std::llround(two_j)) > 1e-12 || two_j < 0) {
    fail(ErrorCode::InvalidArgument, "ladder table: 2J must be a non-negative integer");
  }
  DickeLadderTable t;
  t.spin_length = spin_length;
  const int steps = static_cast<int>(std::llround(two_j));
  t.coeff_plus.reserve(steps);
  const double j = spin_length;
  for (int k = 0; k < steps; ++k) {
    const double m = -j + k;
    t.coeff_plus.push_back(std::sqrt(j * (j + 1.0) - m * (m + 1.0)));
  }
  return t;
}

CollectiveOps collective_ops(int emitters, double spin_length) {
  const HilbertBasis basis = HilbertBasis::dicke(emitters, spin_length);
  const DickeLadderTable table = DickeLadderTable::build(spin_length);
  const Index dim = basis.dimension();

  std::vector<Triplet> up;     // <M+1|J+|M>
  std::vector<Triplet> z;
  up.reserve(dim);
  z.reserve(dim);
  for (Index k = 0; k < dim; ++k) {
    z.emplace_back(k, k, basis.m_value(k));
    if (k + 1 < dim) up.emplace_back(k + 1, k, table.coeff_plus[k]);
  }

  CMat jp = CMat::from_triplets(dim, up);
  CMat jm = jp.adjoint();
  CMat jx = 0.5 * (jp + jm);
  CMat jy = cplx(0.0, -0.5) * (jp - jm);
  CMat jzm = CMat::from_triplets(dim, z);

  return CollectiveOps{
      Operator(basis, std::move(jx), true),  Operator(basis, std::move(jy), true),
      Operator(basis, std::move(jzm), true), Operator(basis, std::move(jp), false),
      Operator(basis, std::move(jm), false),
  };
}

CollectiveOps collective_ops(int emitters) { return collective_ops(emitters, 0.5 * emitters); }

double dicke_xxz_energy(int emitters, double j_mean, double jz_coupling, double spin_length,
                        double m) {
  if (std::abs(m) > spin_length + 1e-12) {
    fail(ErrorCode::InvalidArgument, "dicke_xxz_energy: |M| must not exceed J");
  }
  const double n = emitters;
  return (j_mean / n) * spin_length * (spin_length + 1.0) + (jz_coupling - j_mean) / n * m * m;
}

}  // namespace sqz
