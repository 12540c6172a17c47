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

#include <cmath>

#include <doctest.h>

#include "qrnet/hilbert.hpp"
#include "qrnet/rng.hpp"
#include "qrnet/tensor.hpp"

using namespace qrnet;

namespace {

Matrix bell_state() {
  Vector psi = Vector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return psi * psi.adjoint();
}

Matrix random_matrix(Rng& rng, Index d) {
  Matrix m(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) m(i, j) = rng.normal_complex();
  return m;
}

}  // namespace

TEST_CASE("kron of sigma_z with identity acts on the first factor only") {
  const Matrix k = kron(sigma_z(), Matrix::Identity(2, 2));
  // |10> is index 2; sigma_z = diag(-1,+1) so the first factor contributes +1.
  CHECK(k(2, 2) == Complex(1.0, 0.0));
  CHECK(k(0, 0) == Complex(-1.0, 0.0));
  CHECK(k(1, 1) == Complex(-1.0, 0.0));
  CHECK(k(3, 3) == Complex(1.0, 0.0));
  CHECK(k.diagonal().sum() == Complex(0.0, 0.0));
}

TEST_CASE("kron mixed-product identity on random factors") {
  Rng rng(7);
  const Matrix a = random_matrix(rng, 2), b = random_matrix(rng, 3);
  const Matrix c = random_matrix(rng, 2), d = random_matrix(rng, 3);
  const Matrix lhs = kron(a, b) * kron(c, d);
  const Matrix rhs = kron(a * c, b * d);
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial_trace of a Bell state gives the maximally mixed qubit") {
  const Matrix reduced = partial_trace(bell_state(), SpaceShape{2, 2}, {0});
  CHECK((reduced - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
  const Matrix other = partial_trace(bell_state(), SpaceShape{2, 2}, {1});
  CHECK((other - 0.5 * Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial_trace preserves the trace and keeping all is identity") {
  Rng rng(11);
  const Matrix rho = ginibre_density(rng, 12);
  const SpaceShape shape{2, 2, 3};
  const Matrix reduced = partial_trace(rho, shape, {1});
  CHECK(std::abs(reduced.trace().real() - 1.0) < 1e-12);
  const Matrix all = partial_trace(rho, shape, {0, 1, 2});
  CHECK((all - rho).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("partial_trace contracts kron factors back out") {
  Rng rng(13);
  const Matrix a = ginibre_density(rng, 2);
  const Matrix b = ginibre_density(rng, 3);
  const Matrix joint = kron(a, b);
  CHECK((partial_trace(joint, SpaceShape{2, 3}, {0}) - a).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK((partial_trace(joint, SpaceShape{2, 3}, {1}) - b).cwiseAbs().maxCoeff() <
        1e-12);
}

TEST_CASE("partial_transpose of the Bell state has one negative eigenvalue -1/2") {
  const Matrix pt = partial_transpose(bell_state(), SpaceShape{2, 2}, 1);
  const EigResult eig = herm_eig(pt);
  REQUIRE(eig.eigenvalues.size() == 4);
  CHECK(eig.eigenvalues(0) == doctest::Approx(-0.5).epsilon(1e-12));
  for (int i = 1; i < 4; ++i)
    CHECK(eig.eigenvalues(i) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("partial_transpose is an involution") {
  Rng rng(17);
  const Matrix rho = ginibre_density(rng, 6);
  const SpaceShape shape{2, 3};
  const Matrix twice = partial_transpose(partial_transpose(rho, shape, 0), shape, 0);
  CHECK((twice - rho).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("herm_eig of sigma_x") {
  Matrix sx(2, 2);
  sx << 0, 1, 1, 0;
  const EigResult eig = herm_eig(sx);
  CHECK(eig.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(eig.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));
  // columns reconstruct the input
  const Matrix rebuilt = eig.eigenvectors *
                         eig.eigenvalues.cast<Complex>().asDiagonal() *
                         eig.eigenvectors.adjoint();
  CHECK((rebuilt - sx).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("herm_eig rejects a non-Hermitian input") {
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(herm_eig(m), std::invalid_argument);
}

TEST_CASE("expm of i theta sigma_y is a rotation with determinant 1") {
  const double theta = 0.3;
  Matrix sy(2, 2);
  sy << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  const Matrix u = expm(Complex(0, 1) * theta * sy);
  CHECK(u(0, 0).real() == doctest::Approx(std::cos(theta)).epsilon(1e-12));
  CHECK(u(0, 1).real() == doctest::Approx(std::sin(theta)).epsilon(1e-12));
  CHECK(u.imag().cwiseAbs().maxCoeff() < 1e-13);
  const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
  CHECK(std::abs(det - Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("expm of zero is the identity") {
  const Matrix z = Matrix::Zero(5, 5);
  CHECK((expm(z) - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("expm of a random anti-Hermitian matrix is unitary") {
  Rng rng(19);
  Matrix a = random_matrix(rng, 8);
  a = a - Matrix(a.adjoint());
  const Matrix u = expm(a);
  CHECK((u * u.adjoint() - Matrix::Identity(8, 8)).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("expm matches the diagonal closed form") {
  Matrix d = Matrix::Zero(3, 3);
  d(0, 0) = Complex(0.5, 0.0);
  d(1, 1) = Complex(-1.0, 2.0);
  d(2, 2) = Complex(0.0, -0.7);
  const Matrix e = expm(d);
  for (Index i = 0; i < 3; ++i)
    CHECK(std::abs(e(i, i) - std::exp(d(i, i))) < 1e-13);
  CHECK(std::abs(e(0, 1)) + std::abs(e(1, 2)) < 1e-14);
}

TEST_CASE("trace_norm of the partially transposed Bell state is 2") {
  const Matrix pt = partial_transpose(bell_state(), SpaceShape{2, 2}, 1);
  CHECK(trace_norm(pt) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("SpaceShape validation") {
  CHECK_THROWS_AS(SpaceShape({2, 1}), std::invalid_argument);
  const SpaceShape shape{2, 3};
  CHECK(shape.total() == 6);
  CHECK_THROWS_AS(shape.check_factorizes(5), std::invalid_argument);
}

TEST_CASE("hermiticity_defect is zero on Hermitian input and positive otherwise") {
  Rng rng(23);
  const Matrix rho = ginibre_density(rng, 4);
  CHECK(hermiticity_defect(rho) < 1e-14);
  Matrix skew = rho;
  skew(0, 1) += Complex(0.0, 0.5);
  CHECK(hermiticity_defect(skew) > 0.1);
}
