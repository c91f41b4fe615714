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

// Steady-state solver timing probe. Not registered with ctest.

#include <chrono>
#include <cstdio>

#include "core/models.hpp"

using namespace sqz;

static double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int main(int argc, char** argv) {
  const int n = argc > 1 ? std::atoi(argv[1]) : 7;
  const int mode = argc > 2 ? std::atoi(argv[2]) : 0;  // 0 = xyz full, 1 = dicke

  SolverOptions options;
  if (mode == 0) {
    auto t0 = std::chrono::steady_clock::now();
    ModelBundle bundle = build_xyz(XyzParams{n, -0.8 + 0.02, -0.8 - 0.02, 1.0, 1.0}, Backend::Full);
    std::printf("build: %.2fs\n", seconds_since(t0));
    t0 = std::chrono::steady_clock::now();
    CMat liou = liouvillian(bundle.model);
    std::printf("liouvillian: %.2fs (nnz %lld, side %lld)\n", seconds_since(t0),
                static_cast<long long>(liou.nonzeros()), static_cast<long long>(liou.dim()));
    t0 = std::chrono::steady_clock::now();
    DensityMatrix rho = steady_state(bundle.model, options);
    std::printf("steady_state: %.2fs residual %.3e purity %.6f mineig %.3e\n", seconds_since(t0),
                rho.diagnostics().residual, rho.diagnostics().purity, rho.diagnostics().min_eigenvalue);
  } else {
    auto t0 = std::chrono::steady_clock::now();
    ModelBundle bundle = build_dicke(DickeParams{n, 0.25, 1.0});
    DensityMatrix rho = steady_state(bundle.model, options);
    std::printf("dicke N=%d steady_state: %.2fs residual %.3e purity %.6f\n", n,
                seconds_since(t0), rho.diagnostics().residual, rho.diagnostics().purity);
  }
  return 0;
}
