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

#include <iosfwd>
#include <vector>

#include "qrnet/hilbert.hpp"

namespace qrnet {

// Orthonormal spanning set of the total-spin-zero subspace of n qubits.
struct SingletBasis {
  Matrix vectors;  // 2^n x n_singlets, orthonormal columns
  int n_qubits;

  Index count() const { return vectors.cols(); }
};

// Multiplicity of the j = 0 representation in the Clebsch-Gordan decomposition
// of n spin-1/2 factors, by the standard recursive branching of multiplicities.
// Throws std::invalid_argument for odd or non-positive n.
int singlet_count(int n_qubits);

// Deterministic construction: null space of S^2 (eigenvalues < 1e-8),
// canonicalized by Gram-Schmidt over projections of the lexicographically
// ordered computational basis, first nonzero coordinate made real positive.
SingletBasis build_singlet_basis(int n_qubits);

// Rank-one projectors |I><I| for every basis column.
std::vector<Matrix> singlet_projectors(const SingletBasis& basis);

// Debug dump: one row per computational basis state, re/im column pair per
// singlet vector.
void dump_basis_csv(const SingletBasis& basis, std::ostream& os);

}  // namespace qrnet
