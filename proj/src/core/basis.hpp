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

#include <string>
#include <vector>

#include "core/cmat.hpp"

namespace sqz {

enum class BasisKind { DickeManifold, TensorProduct };

// Finite Hilbert-space basis with a fixed, documented label order.
//
// DickeManifold: states |J,M> with M = -J ... J ascending, dimension 2J+1.
// TensorProduct: N spin-1/2 sites; labels are bit strings with site 0 leftmost
// (most significant), 'd' (down) = 0 and 'u' (up) = 1, in lexicographic order,
// so index 0 is |dd...d> and index 2^N-1 is |uu...u>.
class HilbertBasis {
 public:
  static HilbertBasis dicke(int emitters, double spin_length);
  static HilbertBasis tensor(int emitters);

  BasisKind kind() const { return kind_; }
  int emitters() const { return emitters_; }
  Index dimension() const { return dimension_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Dicke-only accessors.
  double spin_length() const;
  double m_value(Index index) const;

  bool operator==(const HilbertBasis& other) const;
  bool operator!=(const HilbertBasis& other) const { return !(*this == other); }

  std::string describe() const;

 private:
  HilbertBasis() = default;

  BasisKind kind_ = BasisKind::DickeManifold;
  int emitters_ = 0;
  int two_j_ = 0;  // only meaningful for DickeManifold
  Index dimension_ = 0;
  std::vector<std::string> labels_;
};

}  // namespace sqz
