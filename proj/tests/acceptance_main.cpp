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

// Release-gate checks, one per numbered criterion; each prints a single
// PASS/FAIL line with the measured quantity and its pinned tolerance.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "qrnet/experiments.hpp"

using namespace qrnet;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail,
            double seconds) {
  std::printf("%s criterion-%d %s [%.1fs]\n", pass ? "PASS" : "FAIL", criterion,
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void run(int criterion, const std::function<std::pair<bool, std::string>()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    std::tie(pass, detail) = fn();
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  report(criterion, pass, detail, seconds);
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

// 1. singlet multiplicities and collective-spin annihilation of the n=6 basis
std::pair<bool, std::string> criterion_dfs() {
  if (singlet_count(2) != 1 || singlet_count(4) != 2 || singlet_count(6) != 5)
    return {false, "singlet counts deviate from (1,2,5)"};
  const SingletBasis basis = build_singlet_basis(6);
  const CompositeSpace space = CompositeSpace::qubits(6);
  double worst = 0.0;
  for (SpinComponent c : {SpinComponent::plus, SpinComponent::minus,
                          SpinComponent::z}) {
    const Matrix image = total_spin(space, c) * basis.vectors;
    for (Index k = 0; k < basis.count(); ++k)
      worst = std::max(worst, image.col(k).norm());
  }
  return {worst <= 1e-10,
          "counts (1,2,5), max ||S^a v|| = " + fmt(worst) + " (tol 1e-10)"};
}

// 2. trace, Hermiticity and positivity at every checkpoint of a full
//    equilibrate-plus-read cycle at paper defaults
std::pair<bool, std::string> criterion_conservation() {
  ExperimentConfig config;
  config.method = Method::two_qubit;
  config.validate();

  Rng res_rng = make_stream(config.seed, StreamPurpose::reservoir_couplings, 0);
  ReservoirParams params = sample_reservoir(res_rng, config.p_ratio);
  EvolutionConfig evo;
  evo.dt_safety = config.dt_safety;
  evo.t_equilibration = config.t_equilibration(params.gamma);
  evo.t_reading = config.t_reading(params.gamma);

  double worst_trace = 0.0, worst_herm = 0.0, worst_eig = 0.0;
  int step = 0;
  auto inspect = [&](double, const Matrix& rho) {
    ++step;
    worst_trace = std::max(worst_trace, std::abs(rho.trace().real() - 1.0));
    worst_herm = std::max(worst_herm, hermiticity_defect(rho));
    if (step % 20 == 0)
      worst_eig = std::min(worst_eig, herm_eig(rho).eigenvalues.minCoeff());
  };

  const CompositeSpace space = CompositeSpace::qubits(6);
  const Matrix h = reservoir_hamiltonian(params.J, space);
  const LindbladPropagator prop(h, reservoir_collapse(params, space),
                                evo.dt_safety);
  Matrix ground = Matrix::Zero(64, 64);
  ground(0, 0) = 1.0;
  const Matrix rho_eq = prop.propagate(ground, evo.t_equilibration, inspect);
  worst_eig = std::min(worst_eig, herm_eig(rho_eq).eigenvalues.minCoeff());

  Rng w_rng = make_stream(config.seed, StreamPurpose::input_weights, 0);
  const CouplingParams coupling = sample_coupling(w_rng, config.f, evo.t_reading);
  Rng t_rng = make_stream(config.seed, StreamPurpose::train_samples, 0);
  const TeacherState teacher = make_teacher_sample(config, t_rng, 1);
  step = 0;
  const Matrix rho_out =
      read_teacher(rho_eq, teacher, coupling, params, evo, inspect);
  worst_eig = std::min(worst_eig, herm_eig(rho_out).eigenvalues.minCoeff());

  const bool pass = worst_trace <= 1e-7 && worst_herm <= 1e-8 &&
                    worst_eig >= -1e-7;
  return {pass, "|Tr-1| " + fmt(worst_trace) + " (tol 1e-7), herm " +
                    fmt(worst_herm) + " (tol 1e-8), min eig " + fmt(worst_eig) +
                    " (tol -1e-7)"};
}

// 3. decoupled reservoir relaxes to the single-qubit fixed point 1/3
std::pair<bool, std::string> criterion_fixed_point() {
  ReservoirParams params;
  params.J = RealMatrix::Zero(6, 6);
  params.gamma = 1.0;
  params.pump = 0.5;
  const CompositeSpace space = CompositeSpace::qubits(6);
  const Matrix h = reservoir_hamiltonian(params.J, space);
  const LindbladPropagator prop(h, reservoir_collapse(params, space));
  Matrix ground = Matrix::Zero(64, 64);
  ground(0, 0) = 1.0;
  const Matrix rho = prop.propagate(ground, 20.0 / params.gamma);
  double worst = 0.0;
  for (int j = 0; j < 6; ++j) {
    const double n = (rho * number_op(j, space)).trace().real();
    worst = std::max(worst, std::abs(n - 1.0 / 3.0));
  }
  return {worst <= 1e-4,
          "max |<n> - 1/3| = " + fmt(worst) + " (tol 1e-4) at t = 20/gamma"};
}

// 4. population trajectories from the common ground state coincide
std::pair<bool, std::string> criterion_equilibration_symmetry() {
  ExperimentConfig config;
  Rng res_rng = make_stream(config.seed, StreamPurpose::reservoir_couplings, 0);
  const ReservoirParams params = sample_reservoir(res_rng, config.p_ratio);
  EvolutionConfig evo;
  evo.t_equilibration = config.t_equilibration(params.gamma);
  Matrix ground = Matrix::Zero(64, 64);
  ground(0, 0) = 1.0;
  const EquilibrationResult result = equilibrate(ground, params, evo);
  double worst = 0.0;
  for (Index r = 0; r < result.populations.values.rows(); ++r) {
    const double lo = result.populations.values.row(r).minCoeff();
    const double hi = result.populations.values.row(r).maxCoeff();
    worst = std::max(worst, hi - lo);
  }
  return {worst <= 1e-8,
          "max pairwise population spread = " + fmt(worst) + " (tol 1e-8)"};
}

// 5. log-negativity oracles
std::pair<bool, std::string> criterion_logneg() {
  Vector psi = Vector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  const Matrix bell = psi * psi.adjoint();
  const SpaceShape shape{2, 2};
  if (std::abs(log_negativity(bell, shape) - 1.0) > 1e-9)
    return {false, "Bell state logneg deviates from 1"};

  Rng rng(5150, 0);
  double worst_product = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const TeacherState st = random_product_two_qubit(rng);
    worst_product = std::max(worst_product, st.logneg);
  }
  if (worst_product > 1e-9)
    return {false, "product-state logneg up to " + fmt(worst_product)};

  double worst_dev = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Matrix rho = ginibre_density(rng, 4);
    const double base = log_negativity(rho, shape);
    Matrix g1(2, 2), g2(2, 2);
    for (Index r = 0; r < 2; ++r)
      for (Index c = 0; c < 2; ++c) {
        g1(r, c) = rng.normal_complex();
        g2(r, c) = rng.normal_complex();
      }
    const Matrix u = kron(Matrix(Eigen::HouseholderQR<Matrix>(g1).householderQ()),
                          Matrix(Eigen::HouseholderQR<Matrix>(g2).householderQ()));
    const double rotated = log_negativity(u * rho * u.adjoint(), shape);
    worst_dev = std::max(worst_dev, std::abs(rotated - base));
  }
  return {worst_dev <= 1e-9,
          "Bell 1.0, products <= " + fmt(worst_product) +
              ", local-unitary dev " + fmt(worst_dev) + " (tol 1e-9)"};
}

// 6. fock-method learning at paper defaults
std::pair<bool, std::string> criterion_fock_learning() {
  ExperimentConfig config;  // defaults are the paper preset
  config.validate();
  LearnResult result;
  const fs::path dir = fs::temp_directory_path() / "qrnet_acceptance_fock";
  fs::remove_all(dir);
  if (cmd_learn(config, dir, &result) != 0) return {false, "cmd_learn failed"};
  const double mean = result.curve.at(0).mean_error;
  return {mean <= 0.1, "mean error " + fmt(mean) +
                           " (tol 0.1) over 5 runs, n_train 16, n_test 10"};
}

// 7. two-qubit-method learning beats chance at 200 training samples
std::pair<bool, std::string> criterion_two_qubit_learning() {
  ExperimentConfig config;
  config.method = Method::two_qubit;
  config.n_train = 200;
  config.n_test = 10;
  config.n_runs = 5;
  config.validate();
  LearnResult result;
  const fs::path dir = fs::temp_directory_path() / "qrnet_acceptance_two_qubit";
  fs::remove_all(dir);
  if (cmd_learn(config, dir, &result) != 0) return {false, "cmd_learn failed"};
  const double mean = result.curve.at(0).mean_error;
  return {mean <= 0.4 && mean < 0.5,
          "mean error " + fmt(mean) + " (tol 0.4, chance 0.5) over 5 runs"};
}

// 8. DFS states are stationary under purely collective dissipation
std::pair<bool, std::string> criterion_collective_protection() {
  const SingletBasis basis = build_singlet_basis(6);
  const CompositeSpace space = CompositeSpace::qubits(6);
  Rng rng(8086, 0);
  // random mixed state supported on the singlet sector
  const Matrix block = ginibre_density(rng, basis.count());
  const Matrix rho0 = basis.vectors * block * basis.vectors.adjoint();

  const std::vector<Collapse> collective = {
      {total_spin(space, SpinComponent::minus), 1.0},
      {total_spin(space, SpinComponent::plus), 0.5},
      {total_spin(space, SpinComponent::z), 0.7}};
  const LindbladPropagator prop(Matrix::Zero(64, 64), collective);
  const Matrix rho_t = prop.propagate(rho0, 1.0);
  const double dev = (rho_t - rho0).cwiseAbs().maxCoeff();
  return {dev <= 1e-8,
          "max |rho(1) - rho(0)| = " + fmt(dev) + " (tol 1e-8)"};
}

// 9. repeated learn invocations produce byte-identical error curves
std::pair<bool, std::string> criterion_determinism() {
  ExperimentConfig config;
  config.method = Method::two_qubit;
  config.n_train = 8;
  config.n_test = 4;
  config.n_runs = 2;
  config.validate();
  const fs::path dir1 = fs::temp_directory_path() / "qrnet_acceptance_det1";
  const fs::path dir2 = fs::temp_directory_path() / "qrnet_acceptance_det2";
  fs::remove_all(dir1);
  fs::remove_all(dir2);
  if (cmd_learn(config, dir1) != 0 || cmd_learn(config, dir2) != 0)
    return {false, "cmd_learn failed"};
  auto slurp = [](const fs::path& p) {
    std::ifstream is(p, std::ios::binary);
    std::ostringstream os;
    os << is.rdbuf();
    return os.str();
  };
  const std::string a = slurp(dir1 / "learn_errors.csv");
  const std::string b = slurp(dir2 / "learn_errors.csv");
  if (a.empty()) return {false, "empty error-curve CSV"};
  return {a == b, a == b ? "byte-identical learn_errors.csv"
                         : "learn_errors.csv differs between invocations"};
}

}  // namespace

int main() {
  run(1, criterion_dfs);
  run(2, criterion_conservation);
  run(3, criterion_fixed_point);
  run(4, criterion_equilibration_symmetry);
  run(5, criterion_logneg);
  run(6, criterion_fock_learning);
  run(7, criterion_two_qubit_learning);
  run(8, criterion_collective_protection);
  run(9, criterion_determinism);
  std::printf("%d/9 criteria passed\n", 9 - g_failures);
  return g_failures == 0 ? 0 : 1;
}
