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

#include "core/lindblad.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SVD>
#include <Eigen/SparseLU>

#include "core/errors.hpp"

namespace sqz {

namespace {

constexpr double kCommutatorTol = 1e-12;

Operator assemble_dissipator_sum(const HilbertBasis& basis, const std::vector<Jump>& jumps) {
  CMat sum = CMat::zero(basis.dimension(),
                        basis.dimension() < kDenseCrossover ? Storage::Dense : Storage::Sparse);
  for (const Jump& j : jumps) {
    sum += j.rate * (j.op.matrix().adjoint() * j.op.matrix());
  }
  return Operator(basis, std::move(sum), true);
}

// Trace row of the vectorized space: positions k*(dim+1).
SparseMat trace_row(Index dim) {
  SparseMat row(1, dim * dim);
  std::vector<Triplet> entries;
  entries.reserve(dim);
  for (Index k = 0; k < dim; ++k) entries.emplace_back(0, k * (dim + 1), 1.0);
  row.setFromTriplets(entries.begin(), entries.end());
  return row;
}

struct SolveResult {
  Vec x;
  bool unique = true;
  bool uniqueness_checked = false;
};

SolveResult solve_dense(const DenseMat& liou, Index dim, const SolverOptions& options) {
  const bool small = liou.rows() <= 512;
  Eigen::JacobiSVD<DenseMat> jsvd;
  Eigen::BDCSVD<DenseMat> bsvd;
  if (small) {
    jsvd.compute(liou, Eigen::ComputeFullV);
  } else {
    bsvd.compute(liou, Eigen::ComputeFullV);
  }
  const RealVec& sv = small ? jsvd.singularValues() : bsvd.singularValues();
  const DenseMat& v = small ? jsvd.matrixV() : bsvd.matrixV();
  const Index n = sv.size();
  const double scale = sv(0);

  SolveResult result;
  result.uniqueness_checked = options.check_uniqueness;
  const double null_cut = options.uniqueness_tol * std::max(scale, 1e-300);

  Index null_count = 0;
  for (Index k = n - 1; k >= 0 && sv(k) < null_cut; --k) ++null_count;
  if (null_count == 0) null_count = 1;  // smallest singular direction is the best candidate

  if (null_count == 1) {
    result.x = v.col(n - 1);
    return result;
  }

  // Degenerate null space: evolve the all-down projector for a short time and
  // project onto the null basis, as the physically reachable steady state.
  result.unique = false;
  Vec x = Vec::Zero(dim * dim);
  x(0) = 1.0;  // vec(|0><0|)
  const double row_scale = liou.cwiseAbs().rowwise().sum().maxCoeff();
  if (row_scale > 0.0) {
    const double dt = 0.5 / row_scale;
    for (int step = 0; step < 256; ++step) x += dt * (liou * x);
  }
  const auto null_block = v.rightCols(null_count);
  result.x = null_block * (null_block.adjoint() * x);
  if (result.x.norm() == 0.0) result.x = v.col(n - 1);
  return result;
}

SolveResult solve_sparse(const SparseMat& liou, Index dim, const SolverOptions& options) {
  const Index side = dim * dim;

  // Square system: replace the equation for rho(0,0) by the trace constraint.
  // The weight keeps the appended row on the scale of the generator.
  double weight = 0.0;
  for (Index k = 0; k < liou.outerSize(); ++k) {
    for (SparseMat::InnerIterator it(liou, k); it; ++it) weight = std::max(weight, std::abs(it.value()));
  }
  if (weight == 0.0) weight = 1.0;
  SparseMat a(side, side);
  {
    std::vector<Triplet> entries;
    entries.reserve(liou.nonZeros() + dim);
    for (Index k = 0; k < liou.outerSize(); ++k) {
      for (SparseMat::InnerIterator it(liou, k); it; ++it) {
        if (it.row() != 0) entries.emplace_back(it.row(), it.col(), it.value());
      }
    }
    for (Index k = 0; k < dim; ++k) entries.emplace_back(0, k * (dim + 1), weight);
    a.setFromTriplets(entries.begin(), entries.end());
    a.makeCompressed();
  }
  Vec b = Vec::Zero(side);
  b(0) = weight;

  SolveResult result;
  result.uniqueness_checked = false;

  Eigen::SparseLU<SparseMat> lu;
  lu.analyzePattern(a);
  lu.factorize(a);
  if (lu.info() == Eigen::Success) {
    result.x = lu.solve(b);
    // One step of iterative refinement tightens the residual cheaply.
    Vec r = b - a * result.x;
    result.x += lu.solve(r);
    return result;
  }

  // Fallback: preconditioned BiCGSTAB seeded with the all-down projector.
  Eigen::BiCGSTAB<SparseMat, Eigen::IncompleteLUT<cplx>> solver;
  solver.preconditioner().setDroptol(1e-5);
  solver.preconditioner().setFillfactor(12);
  solver.setMaxIterations(options.max_iterations);
  solver.setTolerance(1e-14);
  solver.compute(a);
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::SolverFailure, "steady_state: sparse factorization and preconditioner failed");
  }
  Vec guess = Vec::Zero(side);
  guess(0) = 1.0;
  result.x = solver.solveWithGuess(b, guess);
  if (solver.info() != Eigen::Success) {
    fail(ErrorCode::NotConverged,
         "steady_state: iterative solver stalled at error " + std::to_string(solver.error()));
  }
  return result;
}

}  // namespace

LindbladModel make_model(HilbertBasis basis, Operator h0, Operator h1, double lambda,
                         std::vector<Jump> jumps, std::optional<Operator> dissipator_sum,
                         const Operator* jz_for_u1_check) {
  if (h0.basis() != basis || h1.basis() != basis) {
    fail(ErrorCode::BasisMismatch, "make_model: Hamiltonian basis mismatch");
  }
  if (hermiticity_defect(h0.matrix()) >= kHermitianTol ||
      hermiticity_defect(h1.matrix()) >= kHermitianTol) {
    fail(ErrorCode::NotHermitian, "make_model: H0 and H1 must be Hermitian");
  }
  for (const Jump& j : jumps) {
    if (j.op.basis() != basis) fail(ErrorCode::BasisMismatch, "make_model: jump basis mismatch");
    if (j.rate < 0.0) fail(ErrorCode::InvalidArgument, "make_model: negative jump rate");
  }

  Operator dsum = dissipator_sum ? std::move(*dissipator_sum)
                                 : assemble_dissipator_sum(basis, jumps);
  if (dsum.basis() != basis) fail(ErrorCode::BasisMismatch, "make_model: dissipator basis mismatch");

  LindbladModel model{basis, std::move(h0), std::move(h1), lambda,
                      std::move(jumps), std::move(dsum), true, false};
  if (jz_for_u1_check != nullptr) {
    model.u1_symmetric = commutator(model.h0, *jz_for_u1_check).matrix().max_abs() < kCommutatorTol;
  }
  return model;
}

CMat liouvillian(const LindbladModel& model) {
  if (!model.jumps_generate_dissipator) {
    fail(ErrorCode::Unsupported,
         "liouvillian: model carries manifold-projected jumps; exact generator unavailable");
  }
  const Index dim = model.basis.dimension();
  const Index side = dim * dim;
  const Storage storage = side < kDenseCrossover ? Storage::Dense : Storage::Sparse;

  const CMat h = model.h0.matrix() + model.lambda * model.h1.matrix();
  const CMat id = CMat::identity(dim, dim < kDenseCrossover ? Storage::Dense : Storage::Sparse);

  CMat liou = cplx(0.0, -1.0) * (kron(id, h) - kron(h.transpose(), id));
  for (const Jump& j : model.jumps) {
    const CMat& l = j.op.matrix();
    const CMat ldl = l.adjoint() * l;
    liou += j.rate * kron(l.conjugate(), l);
    liou -= (0.5 * j.rate) * kron(id, ldl);
    liou -= (0.5 * j.rate) * kron(ldl.transpose(), id);
  }
  if (storage == Storage::Dense && !liou.is_dense()) return CMat(liou.to_dense());
  return liou;
}

DensityMatrix steady_state(const LindbladModel& model, const SolverOptions& options) {
  const Index dim = model.basis.dimension();
  if (dim > options.max_dimension) {
    fail(ErrorCode::Dimension, "steady_state: Hilbert dimension " + std::to_string(dim) +
                                   " exceeds the configured cap");
  }
  const CMat liou = liouvillian(model);
  const Index side = dim * dim;

  SolveResult solved = side <= options.dense_cap
                           ? solve_dense(liou.to_dense(), dim, options)
                           : solve_sparse(liou.to_sparse(), dim, options);

  // Lindblad generators commute with Hermitian conjugation, so the Hermitized,
  // trace-normalized vector is still a null vector.
  DenseMat rho = devectorize(solved.x);
  rho = 0.5 * (rho + rho.adjoint()).eval();
  const double tr = rho.trace().real();
  if (std::abs(tr) < 1e-14 * rho.cwiseAbs().maxCoeff()) {
    fail(ErrorCode::SolverFailure, "steady_state: null vector has vanishing trace");
  }
  rho /= tr;

  const double residual = liou.apply(vectorize(rho)).norm();
  if (!(residual < options.tol * static_cast<double>(dim))) {
    fail(ErrorCode::NotConverged, "steady_state: residual " + std::to_string(residual) +
                                      " exceeds tolerance for dim " + std::to_string(dim));
  }

  DensityMatrix out(model.basis, std::move(rho));
  out.set_solver_info(residual, solved.unique, solved.uniqueness_checked);
  return out;
}

}  // namespace sqz
