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
#include <utility>
#include <vector>

#include "qrnet/rng.hpp"
#include "qrnet/tensor.hpp"

namespace qrnet {

enum class Label : int { product = 0, entangled = 1 };

// Labeled input density matrix for the reading phase: a two-factor bipartite
// state together with its log-negativity.
struct TeacherState {
  Matrix rho;
  SpaceShape shape;  // two factors
  Label label;
  double logneg;
};

struct SqueezeParams {
  double s;      // [0.8, 0.95]
  double phi;    // [1/2 - pi/10, 1/2 + pi/10]
  double theta;  // [0, 2pi)
};

// The published formula log2 Tr(G G^dag) evaluates to 0 on a Bell state and
// cannot serve as an entanglement threshold; the trace-norm form
// log2 Tr sqrt(G G^dag) is the default, the literal form is kept for audit.
enum class LognegFormula { trace_norm, literal };

inline constexpr double kDefaultNuMin = 0.15;
inline constexpr int kRejectionBudget = 100000;

// log2 ||G||_1 with G the partial transpose of the second factor, clamped to
// 0 from below.
double log_negativity(const Matrix& rho, const SpaceShape& shape,
                      LognegFormula formula = LognegFormula::trace_norm);

TeacherState random_product_two_qubit(Rng& rng);
TeacherState random_entangled_two_qubit(Rng& rng, double nu_min = kDefaultNuMin);

// Diagonal two-mode thermal state with entries e^{-beta(n1+n2)} / Z1^2,
// Z1 = sum_{j<n_fock} e^{-beta j}.
Matrix thermal_two_mode(double beta, Index n_fock);

// n_bar = s^2 cos^2(phi), beta = ln(1 + 1/n_bar).
std::pair<double, double> mean_occupation(double s, double phi);

// exp(alpha A1^dag A2^dag - conj(alpha) A1 A2) on the truncated two-mode
// Fock space; unitary because the generator stays anti-Hermitian after
// truncation.
Matrix squeeze_operator(Complex alpha, Index n_fock);

SqueezeParams random_squeeze_params(Rng& rng);

// upsilon = S rho_th S^dag for fixed parameters (no labeling/rejection).
Matrix squeezed_thermal_state(const SqueezeParams& params, Index n_fock);

// Rejection-samples squeezed thermal states until logneg >= nu_min.
TeacherState random_squeezed_thermal(Rng& rng, Index n_fock,
                                     double nu_min = kDefaultNuMin);

TeacherState random_product_fock(Rng& rng, Index n_fock);

// Dataset serialization: label, logneg, flattened row-major re/im entries.
void write_dataset_csv(std::ostream& os, const std::vector<TeacherState>& states);
// Binary layout (little-endian float64 throughout): per record
//   [label, logneg, dim, re(0,0), im(0,0), re(0,1), im(0,1), ...] row-major.
void write_dataset_binary(std::ostream& os, const std::vector<TeacherState>& states);

}  // namespace qrnet
