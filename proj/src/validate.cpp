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

#include "qrnet/validate.hpp"

#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>

#include "qrnet/dynamics.hpp"

namespace qrnet {

namespace {

std::string fail(const std::string& what, double value) {
  std::ostringstream os;
  os << what << " = " << value;
  return os.str();
}

}  // namespace

std::string check_singlet_basis(const SingletBasis& basis) {
  const int expected = singlet_count(basis.n_qubits);
  if (basis.count() != expected) return "wrong number of singlet vectors";
  const Matrix gram = basis.vectors.adjoint() * basis.vectors;
  const double ortho =
      (gram - Matrix::Identity(basis.count(), basis.count())).cwiseAbs().maxCoeff();
  if (ortho > 1e-10) return fail("orthonormality defect", ortho);

  const CompositeSpace space = CompositeSpace::qubits(basis.n_qubits);
  for (SpinComponent alpha :
       {SpinComponent::plus, SpinComponent::minus, SpinComponent::z}) {
    const Matrix s = total_spin(space, alpha);
    const double residual = (s * basis.vectors).cwiseAbs().maxCoeff();
    if (residual > 1e-10) return fail("collective annihilation residual", residual);
  }
  return "";
}

std::string check_collective_protection(const SingletBasis& basis) {
  const CompositeSpace space = CompositeSpace::qubits(basis.n_qubits);
  // Density matrix supported entirely inside the DFS, spread over all columns.
  Matrix rho = Matrix::Zero(space.dim(), space.dim());
  for (Index c = 0; c < basis.count(); ++c) {
    const Vector v =
        (basis.vectors.col(c) + 0.5 * basis.vectors.col((c + 1) % basis.count()))
            .normalized();
    rho += v * v.adjoint();
  }
  rho /= rho.trace().real();

  const Matrix zero = Matrix::Zero(space.dim(), space.dim());
  std::vector<Collapse> collapse = {
      {total_spin(space, SpinComponent::minus), 1.0},
      {total_spin(space, SpinComponent::plus), 0.5},
      {total_spin(space, SpinComponent::z), 0.25}};
  const LindbladPropagator prop(zero, collapse);
  const Matrix evolved = prop.propagate(rho, 1.0);
  const double drift = (evolved - rho).cwiseAbs().maxCoeff();
  if (drift > 1e-8) return fail("DFS state drift over unit time", drift);
  return "";
}

namespace {

using Check = std::pair<std::string, std::function<std::string()>>;

std::vector<Check> build_checks(const ExperimentConfig& config) {
  std::vector<Check> checks;

  checks.emplace_back("dfs.singlet_count", [] {
    if (singlet_count(2) != 1) return std::string("singlet_count(2) != 1");
    if (singlet_count(4) != 2) return std::string("singlet_count(4) != 2");
    if (singlet_count(6) != 5) return std::string("singlet_count(6) != 5");
    return std::string();
  });

  checks.emplace_back("dfs.basis_annihilation",
                      [] { return check_singlet_basis(build_singlet_basis(6)); });

  checks.emplace_back("dfs.projectors", [] {
    const auto projectors = singlet_projectors(build_singlet_basis(6));
    for (size_t i = 0; i < projectors.size(); ++i) {
      const Matrix& p = projectors[i];
      if ((p * p - p).cwiseAbs().maxCoeff() > 1e-10)
        return std::string("projector not idempotent");
      if (std::abs(p.trace().real() - 1.0) > 1e-12)
        return std::string("projector trace != 1");
      for (size_t j = i + 1; j < projectors.size(); ++j)
        if ((p * projectors[j]).cwiseAbs().maxCoeff() > 1e-10)
          return std::string("projectors not mutually orthogonal");
    }
    return std::string();
  });

  checks.emplace_back("dfs.collective_protection", [] {
    return check_collective_protection(build_singlet_basis(6));
  });

  checks.emplace_back("tensor.expm_unitarity", [] {
    Rng rng(7, 1);
    Matrix g(8, 8);
    for (Index i = 0; i < 8; ++i)
      for (Index j = 0; j < 8; ++j) g(i, j) = rng.normal_complex();
    const Matrix anti = g - g.adjoint();
    const Matrix u = expm(anti);
    const double defect =
        (u.adjoint() * u - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff();
    if (defect > 1e-10) return fail("exp of anti-Hermitian not unitary", defect);
    return std::string();
  });

  checks.emplace_back("lindblad.trace_preservation", [config] {
    Rng rng(config.seed, 1001);
    const ReservoirParams params = sample_reservoir(rng, config.p_ratio);
    const CompositeSpace space = CompositeSpace::qubits(6);
    const Matrix h = reservoir_hamiltonian(params.J, space);
    Rng state_rng = rng.split(1);
    const Matrix rho = ginibre_density(state_rng, 64);
    const Matrix rhs = lindblad_rhs(rho, h, reservoir_collapse(params, space));
    const double tr = std::abs(rhs.trace());
    if (tr > 1e-12) return fail("Tr(rhs)", tr);
    return std::string();
  });

  checks.emplace_back("lindblad.single_qubit_fixed_point", [] {
    // gamma-decay + pump P = 0.5 gamma on one qubit: steady population 1/3.
    const Matrix b = lowering_op(2);
    const Matrix h = Matrix::Zero(2, 2);
    std::vector<Collapse> collapse = {{b, 1.0}, {b.adjoint(), 0.5}};
    const LindbladPropagator prop(h, collapse);
    Matrix rho = Matrix::Zero(2, 2);
    rho(1, 1) = 1.0;
    rho = prop.propagate(rho, 20.0);
    const double err = std::abs(rho(1, 1).real() - 1.0 / 3.0);
    if (err > 1e-4) return fail("steady population error", err);
    return std::string();
  });

  checks.emplace_back("lindblad.conservation_laws", [config] {
    Rng rng(config.seed, 1002);
    const ReservoirParams params = sample_reservoir(rng, config.p_ratio);
    EvolutionConfig evo;
    evo.dt_safety = config.dt_safety;
    evo.t_equilibration = config.t_equilibration(params.gamma);
    Matrix rho0 = Matrix::Zero(64, 64);
    rho0(0, 0) = 1.0;
    const EquilibrationResult eq = equilibrate(rho0, params, evo);
    const double trace_err = std::abs(eq.rho.trace().real() - 1.0);
    if (trace_err > 1e-7) return fail("|Tr rho - 1|", trace_err);
    const double herm = hermiticity_defect(eq.rho);
    if (herm > 1e-8) return fail("Hermiticity defect", herm);
    const double min_eig = herm_eig(eq.rho).eigenvalues.minCoeff();
    if (min_eig < -1e-7) return fail("min eigenvalue", min_eig);
    return std::string();
  });

  checks.emplace_back("logneg.bell", [config] {
    Matrix bell = Matrix::Zero(4, 4);
    bell(0, 0) = bell(0, 3) = bell(3, 0) = bell(3, 3) = 0.5;
    const double nu = log_negativity(bell, SpaceShape{2, 2}, config.logneg);
    if (config.logneg == LognegFormula::trace_norm && std::abs(nu - 1.0) > 1e-9)
      return fail("Bell log-negativity", nu);
    return std::string();
  });

  checks.emplace_back("logneg.product_states", [config] {
    Rng rng(config.seed, 1003);
    for (int i = 0; i < 200; ++i) {
      const TeacherState st = random_product_two_qubit(rng);
      if (st.logneg > 1e-9) return fail("product-state log-negativity", st.logneg);
    }
    return std::string();
  });

  checks.emplace_back("logneg.local_unitary_invariance", [] {
    Rng rng(11, 1004);
    for (int i = 0; i < 20; ++i) {
      const Matrix rho = ginibre_density(rng, 4);
      Matrix g1(2, 2), g2(2, 2);
      for (Index r = 0; r < 2; ++r)
        for (Index c = 0; c < 2; ++c) {
          g1(r, c) = rng.normal_complex();
          g2(r, c) = rng.normal_complex();
        }
      const Matrix u = kron(expm(g1 - g1.adjoint()), expm(g2 - g2.adjoint()));
      const double before = log_negativity(rho, SpaceShape{2, 2});
      const double after = log_negativity(u * rho * u.adjoint(), SpaceShape{2, 2});
      if (std::abs(before - after) > 1e-9)
        return fail("local-unitary drift", std::abs(before - after));
    }
    return std::string();
  });

  checks.emplace_back("states.squeeze_unitarity", [config] {
    Rng rng(config.seed, 1005);
    const SqueezeParams p = random_squeeze_params(rng);
    const Complex alpha =
        p.s * std::sin(p.phi) * std::exp(Complex(0.0, p.theta));
    const Matrix s = squeeze_operator(alpha, config.n_fock);
    const Index d = config.n_fock * config.n_fock;
    const double defect =
        (s.adjoint() * s - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
    if (defect > 1e-10) return fail("squeeze operator unitarity defect", defect);
    return std::string();
  });

  checks.emplace_back("readout.feature_bounds", [config] {
    Rng rng(config.seed, 1006);
    const ReservoirParams params = sample_reservoir(rng, config.p_ratio);
    EvolutionConfig evo;
    evo.dt_safety = config.dt_safety;
    evo.t_equilibration = config.t_equilibration(params.gamma);
    Matrix rho0 = Matrix::Zero(64, 64);
    rho0(0, 0) = 1.0;
    const Matrix rho = equilibrate(rho0, params, evo).rho;
    const auto projectors = singlet_projectors(build_singlet_basis(6));
    const FeatureVector m = singlet_features(rho, projectors);
    if (m.values.minCoeff() < -1e-10 || m.values.maxCoeff() > 1.0 + 1e-10 ||
        m.values.sum() > 1.0 + 1e-9)
      return std::string("singlet features out of bounds");
    const FeatureVector n = population_features(rho, CompositeSpace::qubits(6));
    if (n.values.minCoeff() < -1e-10 || n.values.maxCoeff() > 1.0 + 1e-10)
      return std::string("population features out of bounds");
    return std::string();
  });

  return checks;
}

}  // namespace

std::vector<std::string> validation_ids() {
  ExperimentConfig config;
  std::vector<std::string> ids;
  for (const auto& [id, fn] : build_checks(config)) ids.push_back(id);
  return ids;
}

std::vector<CheckResult> run_validation(const ExperimentConfig& config) {
  std::vector<CheckResult> results;
  for (const auto& [id, fn] : build_checks(config)) {
    std::string detail;
    try {
      detail = fn();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    results.push_back({id, detail.empty(), detail});
  }
  return results;
}

bool print_validation(const ExperimentConfig& config, std::ostream& os) {
  bool all = true;
  for (const CheckResult& r : run_validation(config)) {
    if (r.pass) {
      os << "PASS " << r.id << "\n";
    } else {
      os << "FAIL " << r.id << " " << r.detail << "\n";
      all = false;
    }
  }
  os << (all ? "OK" : "FAILED") << "\n";
  return all;
}

}  // namespace qrnet
