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

#include "core/models.hpp"

#include "core/errors.hpp"

namespace sqz {

namespace {

constexpr int kFullLiouvillianCap = 8;
constexpr int kFullOperatorCap = 12;

void check_full_backend(int n) {
  if (n < 1 || n > kFullOperatorCap) {
    fail(ErrorCode::Dimension, "full backend requires 1 <= N <= 12");
  }
}

// gamma sum_i S_i^+ S_i^- = gamma (J^z + N/2): exact on the tensor space and,
// restricted to the symmetric manifold, exact there as well.
Operator individual_dissipator_sum(const CollectiveOps& ops, int n, double gamma) {
  const HilbertBasis& basis = ops.jz.basis();
  CMat m = gamma * (ops.jz.matrix() + (0.5 * n) * CMat::identity(basis.dimension(),
                                                                 ops.jz.matrix().is_dense()
                                                                     ? Storage::Dense
                                                                     : Storage::Sparse));
  return Operator(basis, std::move(m), true);
}

std::vector<Jump> individual_jumps(const SiteOperatorSet& sites, double gamma) {
  std::vector<Jump> jumps;
  jumps.reserve(sites.emitters());
  for (int i = 0; i < sites.emitters(); ++i) jumps.push_back(Jump{sites.site(i).sminus, gamma});
  return jumps;
}

Operator xyz_h0(const CollectiveOps& ops, int n, double j_mean, double jz_coupling) {
  CMat m = (j_mean / n) * (ops.jx.matrix() * ops.jx.matrix() + ops.jy.matrix() * ops.jy.matrix()) +
           (jz_coupling / n) * (ops.jz.matrix() * ops.jz.matrix());
  return Operator(ops.jx.basis(), std::move(m), true);
}

Operator xyz_h1(const CollectiveOps& ops, int n, double j_delta) {
  const CMat& jp = ops.jplus.matrix();
  const CMat& jm = ops.jminus.matrix();
  CMat m = (j_delta / (2.0 * n)) * (jp * jp + jm * jm);
  return Operator(ops.jx.basis(), std::move(m), true);
}

Operator tfi_h1(const CollectiveOps& ops, int n, double jx_coupling) {
  const CMat& jp = ops.jplus.matrix();
  const CMat& jm = ops.jminus.matrix();
  CMat m = (jx_coupling / (4.0 * n)) * (jp * jp + jm * jm + jp * jm + jm * jp);
  return Operator(ops.jx.basis(), std::move(m), true);
}

}  // namespace

ModelBundle build_xyz(const XyzParams& params, Backend backend) {
  if (params.gamma <= 0.0) fail(ErrorCode::InvalidArgument, "build_xyz: gamma must be positive");
  if (backend == Backend::Full) {
    check_full_backend(params.n);
    SiteOperatorSet sites = SiteOperatorSet::build(params.n);
    CollectiveOps ops = sites.collective();
    Operator h0 = xyz_h0(ops, params.n, params.j_mean(), params.jz);
    Operator h1 = xyz_h1(ops, params.n, params.j_delta());
    Operator dsum = individual_dissipator_sum(ops, params.n, params.gamma);
    LindbladModel model = make_model(sites.basis(), std::move(h0), std::move(h1), 1.0,
                                     individual_jumps(sites, params.gamma), std::move(dsum),
                                     &ops.jz);
    return ModelBundle{ModelKind::Xyz, std::move(model), std::move(ops), std::move(sites)};
  }

  if (params.n < 2) fail(ErrorCode::InvalidArgument, "build_xyz: Dicke backend needs N >= 2");
  CollectiveOps ops = collective_ops(params.n);
  Operator h0 = xyz_h0(ops, params.n, params.j_mean(), params.jz);
  Operator h1 = xyz_h1(ops, params.n, params.j_delta());
  Operator dsum = individual_dissipator_sum(ops, params.n, params.gamma);
  // Between permutation-symmetric states the projected single-spin jumps act
  // as J^-/N each, so the N of them combine into one J^- channel at rate
  // gamma/N. The exact dissipator sum gamma (J^z + N/2) is kept separately.
  std::vector<Jump> jumps{Jump{ops.jminus, params.gamma / params.n}};
  LindbladModel model = make_model(ops.jx.basis(), std::move(h0), std::move(h1), 1.0,
                                   std::move(jumps), std::move(dsum), &ops.jz);
  model.jumps_generate_dissipator = false;
  return ModelBundle{ModelKind::Xyz, std::move(model), std::move(ops), std::nullopt};
}

ModelBundle build_tfi(const TfiParams& params, Backend backend) {
  if (params.gamma <= 0.0) fail(ErrorCode::InvalidArgument, "build_tfi: gamma must be positive");
  if (backend == Backend::Full) {
    check_full_backend(params.n);
    SiteOperatorSet sites = SiteOperatorSet::build(params.n);
    CollectiveOps ops = sites.collective();
    Operator h0 = Operator(sites.basis(), params.delta * ops.jz.matrix(), true);
    Operator h1 = tfi_h1(ops, params.n, params.jx);
    Operator dsum = individual_dissipator_sum(ops, params.n, params.gamma);
    LindbladModel model = make_model(sites.basis(), std::move(h0), std::move(h1), 1.0,
                                     individual_jumps(sites, params.gamma), std::move(dsum),
                                     &ops.jz);
    return ModelBundle{ModelKind::Tfi, std::move(model), std::move(ops), std::move(sites)};
  }

  if (params.n < 2) fail(ErrorCode::InvalidArgument, "build_tfi: Dicke backend needs N >= 2");
  CollectiveOps ops = collective_ops(params.n);
  Operator h0 = Operator(ops.jz.basis(), params.delta * ops.jz.matrix(), true);
  Operator h1 = tfi_h1(ops, params.n, params.jx);
  Operator dsum = individual_dissipator_sum(ops, params.n, params.gamma);
  std::vector<Jump> jumps{Jump{ops.jminus, params.gamma / params.n}};
  LindbladModel model = make_model(ops.jz.basis(), std::move(h0), std::move(h1), 1.0,
                                   std::move(jumps), std::move(dsum), &ops.jz);
  model.jumps_generate_dissipator = false;
  return ModelBundle{ModelKind::Tfi, std::move(model), std::move(ops), std::nullopt};
}

ModelBundle build_dicke(const DickeParams& params) {
  if (params.big_gamma <= 0.0) fail(ErrorCode::InvalidArgument, "build_dicke: Gamma must be positive");
  if (params.n < 1) fail(ErrorCode::InvalidArgument, "build_dicke: N must be positive");
  CollectiveOps ops = collective_ops(params.n);
  const HilbertBasis& basis = ops.jx.basis();
  const Storage storage = basis.dimension() < kDenseCrossover ? Storage::Dense : Storage::Sparse;
  Operator h0 = Operator(basis, CMat::zero(basis.dimension(), storage), true);
  Operator h1 = Operator(basis, -params.omega * ops.jx.matrix(), true);
  std::vector<Jump> jumps{Jump{ops.jminus, params.big_gamma / params.n}};
  LindbladModel model = make_model(basis, std::move(h0), std::move(h1), 1.0, std::move(jumps),
                                   std::nullopt, &ops.jz);
  return ModelBundle{ModelKind::DrivenDicke, std::move(model), std::move(ops), std::nullopt};
}

}  // namespace sqz
