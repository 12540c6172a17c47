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

#include "qrnet/hilbert.hpp"

#include <cmath>

namespace qrnet {

CompositeSpace CompositeSpace::qubits(int n) {
  CompositeSpace space;
  space.shape.dims.assign(static_cast<size_t>(n), 2);
  for (int i = 0; i < n; ++i) space.labels.push_back("qubit" + std::to_string(i));
  return space;
}

CompositeSpace CompositeSpace::reservoir_with_teacher(Index teacher_dim) {
  CompositeSpace space = qubits(6);
  for (int k = 6; k <= 7; ++k) {
    space.shape.dims.push_back(teacher_dim);
    space.labels.push_back("teacher" + std::to_string(k));
  }
  return space;
}

Matrix lowering_op(Index d) {
  if (d < 2) throw std::invalid_argument("lowering_op: dimension must be >= 2");
  Matrix a = Matrix::Zero(d, d);
  for (Index n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Matrix sigma_z() {
  Matrix s = Matrix::Zero(2, 2);
  s(0, 0) = -1.0;
  s(1, 1) = 1.0;
  return s;
}

Matrix sigma_plus() {
  Matrix s = Matrix::Zero(2, 2);
  s(1, 0) = 1.0;
  return s;
}

Matrix sigma_minus() { return lowering_op(2); }

Matrix embed(const Matrix& op, int site, const CompositeSpace& space) {
  if (site < 0 || site >= space.n_sites())
    throw std::invalid_argument("embed: site out of range");
  const Index d = space.shape.dims[static_cast<size_t>(site)];
  if (op.rows() != d || op.cols() != d)
    throw std::invalid_argument("embed: operator dimension does not match site");

  Index left = 1, right = 1;
  for (int k = 0; k < site; ++k) left *= space.shape.dims[static_cast<size_t>(k)];
  for (Index k = site + 1; k < space.n_sites(); ++k)
    right *= space.shape.dims[static_cast<size_t>(k)];
  return kron(kron(Matrix::Identity(left, left), op), Matrix::Identity(right, right));
}

namespace {

void require_all_qubits(const CompositeSpace& space) {
  for (Index d : space.shape.dims)
    if (d != 2)
      throw std::invalid_argument("total spin operators need all subsystems of dim 2");
}

}  // namespace

Matrix total_spin(const CompositeSpace& space, SpinComponent component) {
  require_all_qubits(space);
  Matrix local;
  switch (component) {
    case SpinComponent::plus: local = sigma_plus(); break;
    case SpinComponent::minus: local = sigma_minus(); break;
    case SpinComponent::z: local = sigma_z(); break;
  }
  Matrix out = Matrix::Zero(space.dim(), space.dim());
  for (int i = 0; i < space.n_sites(); ++i) out += embed(local, i, space);
  return out;
}

Matrix total_spin_squared(const CompositeSpace& space) {
  const Matrix sp = total_spin(space, SpinComponent::plus);
  const Matrix sm = total_spin(space, SpinComponent::minus);
  const Matrix sz_half = 0.5 * total_spin(space, SpinComponent::z);
  const Matrix sx = 0.5 * (sp + sm);
  const Matrix sy = (sp - sm) / Complex(0.0, 2.0);
  return sx * sx + sy * sy + sz_half * sz_half;
}

Matrix number_op(int site, const CompositeSpace& space) {
  const Index d = space.shape.dims[static_cast<size_t>(site)];
  const Matrix a = lowering_op(d);
  return embed(a.adjoint() * a, site, space);
}

}  // namespace qrnet
