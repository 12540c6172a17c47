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

#include "qrnet/dfs.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qrnet {

namespace {
constexpr double kNullSpaceTol = 1e-8;
}

int singlet_count(int n_qubits) {
  if (n_qubits <= 0 || n_qubits % 2 != 0)
    throw std::invalid_argument("singlet_count: n_qubits must be even and positive");
  // multiplicities[j2/2] for twice-spin j2 = 0, 1, ..., n
  std::vector<long long> mult(static_cast<size_t>(n_qubits) + 2, 0);
  mult[1] = 1;  // one spin-1/2
  for (int n = 2; n <= n_qubits; ++n) {
    std::vector<long long> next(mult.size(), 0);
    for (size_t j2 = 0; j2 + 1 < mult.size(); ++j2) {
      if (mult[j2] == 0) continue;
      next[j2 + 1] += mult[j2];
      if (j2 >= 1) next[j2 - 1] += mult[j2];
    }
    mult = next;
  }
  return static_cast<int>(mult[0]);
}

SingletBasis build_singlet_basis(int n_qubits) {
  const int expected = singlet_count(n_qubits);
  const CompositeSpace space = CompositeSpace::qubits(n_qubits);
  const EigResult eig = herm_eig(total_spin_squared(space));

  Index n_null = 0;
  while (n_null < eig.eigenvalues.size() && eig.eigenvalues(n_null) < kNullSpaceTol)
    ++n_null;
  if (n_null != expected)
    throw std::runtime_error("build_singlet_basis: null-space rank mismatch");

  const Matrix null_block = eig.eigenvectors.leftCols(n_null);
  const Matrix projector = null_block * null_block.adjoint();

  // Canonical basis: Gram-Schmidt over projected computational basis vectors
  // in lexicographic order, fixed phase on the first nonzero coordinate.
  const Index dim = space.dim();
  Matrix basis(dim, n_null);
  Index found = 0;
  for (Index k = 0; k < dim && found < n_null; ++k) {
    Vector v = projector.col(k);
    for (Index c = 0; c < found; ++c) v -= basis.col(c).dot(v) * basis.col(c);
    const double norm = v.norm();
    if (norm < 1e-6) continue;
    v /= norm;
    for (Index i = 0; i < dim; ++i) {
      if (std::abs(v(i)) > 1e-10) {
        v *= std::conj(v(i)) / std::abs(v(i));
        break;
      }
    }
    basis.col(found++) = v;
  }
  if (found != n_null)
    throw std::runtime_error("build_singlet_basis: canonicalization exhausted basis");
  return {basis, n_qubits};
}

std::vector<Matrix> singlet_projectors(const SingletBasis& basis) {
  std::vector<Matrix> out;
  out.reserve(static_cast<size_t>(basis.count()));
  for (Index c = 0; c < basis.count(); ++c) {
    const Vector v = basis.vectors.col(c);
    out.push_back(v * v.adjoint());
  }
  return out;
}

void dump_basis_csv(const SingletBasis& basis, std::ostream& os) {
  os << "state";
  for (Index c = 0; c < basis.count(); ++c)
    os << ",re" << c << ",im" << c;
  os << "\n";
  char buf[64];
  for (Index i = 0; i < basis.vectors.rows(); ++i) {
    os << i;
    for (Index c = 0; c < basis.count(); ++c) {
      std::snprintf(buf, sizeof(buf), ",%.17g,%.17g", basis.vectors(i, c).real(),
                    basis.vectors(i, c).imag());
      os << buf;
    }
    os << "\n";
  }
}

}  // namespace qrnet
