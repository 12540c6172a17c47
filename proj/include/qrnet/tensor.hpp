// Copyright 2026 The qrnet Authors
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

#include <stdexcept>
#include <vector>

#include "qrnet/types.hpp"

namespace qrnet {

// Ordered subsystem dimensions factorizing a matrix index, leftmost factor
// slowest (matching the Kronecker-product convention of kron()).
struct SpaceShape {
  std::vector<Index> dims;

  SpaceShape() = default;
  SpaceShape(std::initializer_list<Index> d) : dims(d) { validate(); }
  explicit SpaceShape(std::vector<Index> d) : dims(std::move(d)) { validate(); }

  Index total() const {
    Index p = 1;
    for (Index d : dims) p *= d;
    return p;
  }
  Index size() const { return static_cast<Index>(dims.size()); }

  void validate() const {
    for (Index d : dims)
      if (d < 2) throw std::invalid_argument("SpaceShape: every dim must be >= 2");
  }
  void check_factorizes(Index dim) const {
    if (total() != dim)
      throw std::invalid_argument("SpaceShape does not factorize matrix dimension");
  }
};

Matrix kron(const Matrix& a, const Matrix& b);

// Traces out every subsystem not listed in `keep`; the kept subsystems retain
// their relative order.
Matrix partial_trace(const Matrix& rho, const SpaceShape& shape,
                     const std::vector<int>& keep);

// Transposes the indices of one subsystem of a bipartite (or general
// multipartite) factorization.
Matrix partial_transpose(const Matrix& rho, const SpaceShape& shape, int subsystem);

struct EigResult {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // orthonormal columns
};

// Eigendecomposition of a Hermitian matrix. Throws std::invalid_argument if
// the input fails the Hermiticity check (max |A - A^dag| > kHermiticityTol).
EigResult herm_eig(const Matrix& a);

// Matrix exponential by scaling-and-squaring with a Taylor core.
Matrix expm(const Matrix& a);

// Sum of absolute eigenvalues of a Hermitian matrix.
double trace_norm(const Matrix& a);

double hermiticity_defect(const Matrix& a);

}  // namespace qrnet
