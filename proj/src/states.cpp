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

#include "qrnet/states.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "qrnet/hilbert.hpp"

namespace qrnet {

double log_negativity(const Matrix& rho, const SpaceShape& shape,
                      LognegFormula formula) {
  const Matrix g = partial_transpose(rho, shape, 1);
  if (formula == LognegFormula::literal)
    return std::log2((g * g.adjoint()).trace().real());
  // Tr||G||_1 >= 1 for a unit-trace state, so anything below 0 is round-off.
  return std::max(std::log2(trace_norm(g)), 0.0);
}

TeacherState random_product_two_qubit(Rng& rng) {
  const Matrix a = ginibre_density(rng, 2);
  const Matrix b = ginibre_density(rng, 2);
  TeacherState state{kron(a, b), SpaceShape{2, 2}, Label::product, 0.0};
  state.logneg = log_negativity(state.rho, state.shape);
  return state;
}

TeacherState random_entangled_two_qubit(Rng& rng, double nu_min) {
  if (nu_min <= 0.0 || nu_min > 1.0)
    throw std::invalid_argument("random_entangled_two_qubit: nu_min out of (0,1]");
  const SpaceShape shape{2, 2};
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    Matrix rho = ginibre_density(rng, 4);
    const double nu = log_negativity(rho, shape);
    if (nu >= nu_min) return {std::move(rho), shape, Label::entangled, nu};
  }
  throw std::runtime_error(
      "random_entangled_two_qubit: rejection budget exhausted (nu_min too high "
      "for the Ginibre measure)");
}

Matrix thermal_two_mode(double beta, Index n_fock) {
  if (beta <= 0.0) throw std::invalid_argument("thermal_two_mode: beta must be > 0");
  double z1 = 0.0;
  for (Index j = 0; j < n_fock; ++j) z1 += std::exp(-beta * static_cast<double>(j));
  Matrix rho = Matrix::Zero(n_fock * n_fock, n_fock * n_fock);
  double trace = 0.0;
  for (Index n1 = 0; n1 < n_fock; ++n1)
    for (Index n2 = 0; n2 < n_fock; ++n2) {
      const double p = std::exp(-beta * static_cast<double>(n1 + n2)) / (z1 * z1);
      rho(n1 * n_fock + n2, n1 * n_fock + n2) = p;
      trace += p;
    }
  rho /= trace;  // exact unit trace despite rounding in Z1
  return rho;
}

std::pair<double, double> mean_occupation(double s, double phi) {
  const double c = std::cos(phi);
  const double n_bar = s * s * c * c;
  if (n_bar <= 0.0)
    throw std::invalid_argument("mean_occupation: n_bar = 0 gives infinite beta");
  return {n_bar, std::log(1.0 + 1.0 / n_bar)};
}

Matrix squeeze_operator(Complex alpha, Index n_fock) {
  const Matrix a = lowering_op(n_fock);
  const Matrix id = Matrix::Identity(n_fock, n_fock);
  const Matrix a1 = kron(a, id);
  const Matrix a2 = kron(id, a);
  const Matrix gen =
      alpha * a1.adjoint() * a2.adjoint() - std::conj(alpha) * a1 * a2;
  return expm(gen);
}

SqueezeParams random_squeeze_params(Rng& rng) {
  constexpr double pi = std::numbers::pi;
  SqueezeParams p;
  p.s = rng.uniform(0.8, 0.95);
  p.phi = rng.uniform(0.5 - pi / 10.0, 0.5 + pi / 10.0);
  p.theta = rng.uniform(0.0, 2.0 * pi);
  return p;
}

Matrix squeezed_thermal_state(const SqueezeParams& params, Index n_fock) {
  const auto [n_bar, beta] = mean_occupation(params.s, params.phi);
  const Complex alpha =
      params.s * std::sin(params.phi) * std::exp(Complex(0.0, params.theta));
  const Matrix s = squeeze_operator(alpha, n_fock);
  return s * thermal_two_mode(beta, n_fock) * s.adjoint();
}

TeacherState random_squeezed_thermal(Rng& rng, Index n_fock, double nu_min) {
  const SpaceShape shape{n_fock, n_fock};
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    Matrix rho = squeezed_thermal_state(random_squeeze_params(rng), n_fock);
    const double nu = log_negativity(rho, shape);
    if (nu >= nu_min) return {std::move(rho), shape, Label::entangled, nu};
  }
  throw std::runtime_error("random_squeezed_thermal: rejection budget exhausted");
}

TeacherState random_product_fock(Rng& rng, Index n_fock) {
  const Matrix a = ginibre_density(rng, n_fock);
  const Matrix b = ginibre_density(rng, n_fock);
  TeacherState state{kron(a, b), SpaceShape{n_fock, n_fock}, Label::product, 0.0};
  state.logneg = log_negativity(state.rho, state.shape);
  return state;
}

void write_dataset_csv(std::ostream& os, const std::vector<TeacherState>& states) {
  os << "label,logneg,entries_re_im_row_major\n";
  char buf[64];
  for (const TeacherState& st : states) {
    os << static_cast<int>(st.label);
    std::snprintf(buf, sizeof(buf), ",%.17g", st.logneg);
    os << buf;
    for (Index i = 0; i < st.rho.rows(); ++i)
      for (Index j = 0; j < st.rho.cols(); ++j) {
        std::snprintf(buf, sizeof(buf), ",%.17g,%.17g", st.rho(i, j).real(),
                      st.rho(i, j).imag());
        os << buf;
      }
    os << "\n";
  }
}

void write_dataset_binary(std::ostream& os, const std::vector<TeacherState>& states) {
  auto put = [&os](double v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(double));
  };
  for (const TeacherState& st : states) {
    put(static_cast<double>(static_cast<int>(st.label)));
    put(st.logneg);
    put(static_cast<double>(st.rho.rows()));
    for (Index i = 0; i < st.rho.rows(); ++i)
      for (Index j = 0; j < st.rho.cols(); ++j) {
        put(st.rho(i, j).real());
        put(st.rho(i, j).imag());
      }
  }
}

}  // namespace qrnet
