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

#include <string>
#include <vector>

#include "qrnet/tensor.hpp"

namespace qrnet {

// Basis convention used throughout: |0> = ground, |1> = excited, so the qubit
// lowering operator b has b[0,1] = 1 and sigma_z = diag(-1, +1) = 2 b^dag b - I.
// In composite spaces the reservoir qubits occupy sites 0..5 and teacher
// subsystems come last.
struct CompositeSpace {
  SpaceShape shape;
  std::vector<std::string> labels;

  Index dim() const { return shape.total(); }
  Index n_sites() const { return shape.size(); }

  static CompositeSpace qubits(int n);
  // Six reservoir qubits followed by two teacher subsystems of dimension
  // teacher_dim (2 for two-qubit teachers, N_F for truncated bosonic modes).
  static CompositeSpace reservoir_with_teacher(Index teacher_dim);
};

// d x d lowering operator: a|n> = sqrt(n)|n-1>. For d = 2 this is sigma^-.
Matrix lowering_op(Index d);

Matrix sigma_z();      // diag(-1, +1)
Matrix sigma_plus();   // |1><0|
Matrix sigma_minus();  // |0><1|

// I x ... x op x ... x I with op at position `site`.
Matrix embed(const Matrix& op, int site, const CompositeSpace& space);

enum class SpinComponent { plus, minus, z };

// S^alpha = sum_i sigma^alpha_i over all (qubit) sites.
Matrix total_spin(const CompositeSpace& space, SpinComponent component);

// Total spin squared in spin-1/2 normalization: S^2 = Sx^2 + Sy^2 + (Sz/2)^2
// with Sx = (S+ + S-)/2, Sy = (S+ - S-)/(2i); eigenvalues are j(j+1).
Matrix total_spin_squared(const CompositeSpace& space);

// embed(a^dag a, site) for the site's local dimension.
Matrix number_op(int site, const CompositeSpace& space);

}  // namespace qrnet
