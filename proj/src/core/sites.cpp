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

#include "core/sites.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace sqz {

namespace {

// Bit of |index> at a site; site 0 is the most significant bit, u = 1.
inline bool site_up(Index index, int site, int emitters) {
  return (index >> (emitters - 1 - site)) & 1;
}

inline Index flip(Index index, int site, int emitters) {
  return index ^ (Index{1} << (emitters - 1 - site));
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

}  // namespace

SiteOperatorSet SiteOperatorSet::build(int emitters) {
  if (emitters < 1 || emitters > 12) {
    fail(ErrorCode::Dimension, "site operators: emitter count must be in [1,12]");
  }
  HilbertBasis basis = HilbertBasis::tensor(emitters);
  const Index dim = basis.dimension();
  SiteOperatorSet set(emitters, basis);
  set.sites_.reserve(emitters);

  for (int i = 0; i < emitters; ++i) {
    std::vector<Triplet> plus;   // S+ : flips d -> u at site i
    std::vector<Triplet> z;
    plus.reserve(dim / 2);
    z.reserve(dim);
    for (Index idx = 0; idx < dim; ++idx) {
      const bool up = site_up(idx, i, emitters);
      z.emplace_back(idx, idx, up ? 0.5 : -0.5);
      if (!up) plus.emplace_back(flip(idx, i, emitters), idx, 1.0);
    }
    CMat sp = CMat::from_triplets(dim, plus, Storage::Sparse);
    CMat sm = sp.adjoint();
    CMat sx = 0.5 * (sp + sm);
    CMat sy = cplx(0.0, -0.5) * (sp - sm);
    CMat sz = CMat::from_triplets(dim, z, Storage::Sparse);
    set.sites_.push_back(SiteOps{
        Operator(basis, std::move(sx), true), Operator(basis, std::move(sy), true),
        Operator(basis, std::move(sz), true), Operator(basis, std::move(sp), false),
        Operator(basis, std::move(sm), false)});
  }
  return set;
}

const SiteOps& SiteOperatorSet::site(int i) const {
  if (i < 0 || i >= emitters_) fail(ErrorCode::InvalidArgument, "site index out of range");
  return sites_[static_cast<size_t>(i)];
}

CollectiveOps SiteOperatorSet::collective() const {
  Operator jx = sites_[0].sx, jy = sites_[0].sy, jz = sites_[0].sz;
  Operator jp = sites_[0].splus, jm = sites_[0].sminus;
  for (int i = 1; i < emitters_; ++i) {
    jx = jx + sites_[i].sx;
    jy = jy + sites_[i].sy;
    jz = jz + sites_[i].sz;
    jp = jp + sites_[i].splus;
    jm = jm + sites_[i].sminus;
  }
  return CollectiveOps{std::move(jx), std::move(jy), std::move(jz), std::move(jp), std::move(jm)};
}

SparseMat symmetric_isometry(int emitters) {
  if (emitters < 1 || emitters > 12) {
    fail(ErrorCode::Dimension, "symmetric isometry: emitter count must be in [1,12]");
  }
  const Index dim = Index{1} << emitters;
  SparseMat v(dim, emitters + 1);
  std::vector<Triplet> entries;
  entries.reserve(dim);
  for (Index idx = 0; idx < dim; ++idx) {
    int ups = 0;
    for (int site = 0; site < emitters; ++site) {
      if (site_up(idx, site, emitters)) ++ups;
    }
    // Column k corresponds to M = -N/2 + k, i.e. k up spins.
    entries.emplace_back(idx, ups, 1.0 / std::sqrt(binomial(emitters, ups)));
  }
  v.setFromTriplets(entries.begin(), entries.end());
  v.makeCompressed();
  return v;
}

}  // namespace sqz
