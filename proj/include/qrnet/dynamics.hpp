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

#include <functional>
#include <vector>

#include "qrnet/hilbert.hpp"
#include "qrnet/states.hpp"

namespace qrnet {

struct Collapse {
  Matrix op;
  double rate;
};

// Reservoir couplings J (6x6 symmetric, zero diagonal, entries in [-1,1]),
// dissipation rate gamma and incoherent pump rate P.
struct ReservoirParams {
  RealMatrix J;
  double gamma = 0.0;
  double pump = 0.0;
};

// Input weights W_j, teacher coupling constant f and the interaction-on
// duration tau.
struct CouplingParams {
  RealVector W;
  double f = 10.0;
  double tau = 0.0;
};

struct EvolutionConfig {
  // dt is chosen as the largest step with dt * (||H||_2 + gamma + P) <= dt_safety.
  double dt_safety = 0.05;
  double t_equilibration = 0.0;
  double t_reading = 0.0;
};

// J ~ U[-1,1] per unordered pair; gamma = spectral radius of the resulting
// H_R; pump = p_ratio * gamma.
ReservoirParams sample_reservoir(Rng& rng, double p_ratio);

CouplingParams sample_coupling(Rng& rng, double f, double tau);

// H_R = sum_{i<j} J_ij (b_i^dag b_j + b_j^dag b_i) on the given space (which
// must contain the six reservoir qubits at sites 0..5).
Matrix reservoir_hamiltonian(const RealMatrix& J, const CompositeSpace& space);

// H_I = sum_{k=6,7} sum_{j=0..5} f W_j (a_k^dag b_j + b_j^dag a_k) on a joint
// space of 6 reservoir qubits plus 2 teacher subsystems.
Matrix interaction_hamiltonian(const CouplingParams& params,
                               const CompositeSpace& joint);

// drho/dt = -i[h, rho] + sum rate/2 (2 x rho x^dag - x^dag x rho - rho x^dag x).
Matrix lindblad_rhs(const Matrix& rho, const Matrix& h,
                    const std::vector<Collapse>& collapse);

// Fixed-step RK4 integrator working directly on the density matrix, with
// sparse application of the Hamiltonian and collapse operators and
// re-symmetrization after every step.
class LindbladPropagator {
 public:
  LindbladPropagator(const Matrix& h, const std::vector<Collapse>& collapse,
                     double dt_safety = 0.05);

  // Called after every RK4 step with (t, rho).
  using StepCallback = std::function<void(double, const Matrix&)>;

  // Schroedinger picture. Checks trace and Hermiticity drift and throws
  // std::runtime_error (advising a smaller dt_safety) on breach.
  Matrix propagate(Matrix rho, double t_total,
                   const StepCallback& on_step = nullptr) const;

  // Heisenberg picture: evolves an observable under the adjoint generator, so
  // that Tr(rho(t) A) = Tr(rho(0) propagate_adjoint(A, t)).
  Matrix propagate_adjoint(Matrix obs, double t_total) const;

  double step_size(double t_total, int* n_steps = nullptr) const;

 private:
  Matrix rhs(const Matrix& rho) const;
  Matrix rhs_adjoint(const Matrix& obs) const;

  SparseMatrix h_;
  struct SparseCollapse {
    SparseMatrix op;
    SparseMatrix op_dag;
    SparseMatrix op_dag_op;
    double rate;
  };
  std::vector<SparseCollapse> collapse_;
  double rate_bound_ = 0.0;  // gamma + P of the spec's step rule
  double h_norm_ = 0.0;      // spectral norm estimate (power iteration)
  double dt_safety_;
};

// Reservoir-only collapse set {(b_j, gamma)} u {(b_j^dag, P)}, j = 0..5, on
// `space` (works for the bare reservoir and for joint spaces).
std::vector<Collapse> reservoir_collapse(const ReservoirParams& params,
                                         const CompositeSpace& space);

struct Trajectory {
  std::vector<double> times;
  RealMatrix values;  // one row per sampled time
};

struct EquilibrationResult {
  Matrix rho;
  Trajectory populations;  // columns n_0..n_5
};

// Propagates the bare 64x64 reservoir under H_R with dissipation and pump for
// t_equilibration, recording <n_i(t)> every `stride` steps.
EquilibrationResult equilibrate(const Matrix& rho0, const ReservoirParams& params,
                                const EvolutionConfig& config, int stride = 1);

// rho_joint = rho_reservoir (sites 0..5) x rho_teacher (sites 6..7), propagated
// under H_R + H_I with reservoir-only dissipators for min(t_reading, tau), then
// under H_R alone for the remainder; returns the reservoir state after tracing
// out the teacher. `on_step` (optional) sees the joint state.
Matrix read_teacher(const Matrix& reservoir_rho, const TeacherState& teacher,
                    const CouplingParams& coupling, const ReservoirParams& params,
                    const EvolutionConfig& config,
                    const LindbladPropagator::StepCallback& on_step = nullptr);

// Heisenberg-picture shortcut for batch feature extraction: for each reservoir
// observable O the returned teacher-space matrix C satisfies
//   Tr(read_teacher(rho_res, rho_teach) * O) = Tr(rho_teach * C)
// for every teacher density matrix (the reading map is linear in the teacher).
std::vector<Matrix> teacher_feature_operators(
    const Matrix& reservoir_rho, const std::vector<Matrix>& observables,
    const CouplingParams& coupling, const ReservoirParams& params,
    const EvolutionConfig& config, Index teacher_dim);

}  // namespace qrnet
