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

#include "core/basis.hpp"

#include <cmath>

#include "core/errors.hpp"

namespace sqz {

namespace {

std::string m_label(int two_m) {
  if (two_m % 2 == 0) return "M=" + std::to_string(two_m / 2);
  return "M=" + std::to_string(two_m) + "/2";
}

}  // namespace

HilbertBasis HilbertBasis::dicke(int emitters, double spin_length) {
  const double two_j_real = 2.0 * spin_length;
  const int two_j = static_cast<int>(std::llround(two_j_real));
  if (std::abs(two_j_real - two_j) > 1e-12 || two_j < 0) {
    fail(ErrorCode::InvalidArgument, "Dicke basis: 2J must be a non-negative integer");
  }
  if (emitters < 1 || two_j > emitters) {
    fail(ErrorCode::InvalidArgument, "Dicke basis: requires 1 <= 2J <= N");
  }
  HilbertBasis b;
  b.kind_ = BasisKind::DickeManifold;
  b.emitters_ = emitters;
  b.two_j_ = two_j;
  b.dimension_ = two_j + 1;
  b.labels_.reserve(b.dimension_);
  for (int k = 0; k <= two_j; ++k) b.labels_.push_back(m_label(-two_j + 2 * k));
  return b;
}

HilbertBasis HilbertBasis::tensor(int emitters) {
  if (emitters < 1 || emitters > 16) {
    fail(ErrorCode::InvalidArgument, "tensor basis: emitter count must be in [1,16]");
  }
  HilbertBasis b;
  b.kind_ = BasisKind::TensorProduct;
  b.emitters_ = emitters;
  b.two_j_ = 0;
  b.dimension_ = Index{1} << emitters;
  b.labels_.reserve(b.dimension_);
  for (Index idx = 0; idx < b.dimension_; ++idx) {
    std::string label(emitters, 'd');
    for (int site = 0; site < emitters; ++site) {
      if ((idx >> (emitters - 1 - site)) & 1) label[site] = 'u';
    }
    b.labels_.push_back(std::move(label));
  }
  return b;
}

double HilbertBasis::spin_length() const {
  if (kind_ != BasisKind::DickeManifold) {
    fail(ErrorCode::Unsupported, "spin_length: not a Dicke-manifold basis");
  }
  return 0.5 * two_j_;
}

double HilbertBasis::m_value(Index index) const {
  if (kind_ != BasisKind::DickeManifold) {
    fail(ErrorCode::Unsupported, "m_value: not a Dicke-manifold basis");
  }
  if (index < 0 || index >= dimension_) fail(ErrorCode::InvalidArgument, "m_value: index out of range");
  return -0.5 * two_j_ + static_cast<double>(index);
}

bool HilbertBasis::operator==(const HilbertBasis& other) const {
  return kind_ == other.kind_ && emitters_ == other.emitters_ && two_j_ == other.two_j_ &&
         dimension_ == other.dimension_;
}

std::string HilbertBasis::describe() const {
  if (kind_ == BasisKind::DickeManifold) {
    return "Dicke(N=" + std::to_string(emitters_) + ", 2J=" + std::to_string(two_j_) + ")";
  }
  return "Tensor(N=" + std::to_string(emitters_) + ")";
}

}  // namespace sqz
