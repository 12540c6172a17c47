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

#include "qrnet/tensor.hpp"

#include <algorithm>
#include <cmath>

namespace qrnet {

double hermiticity_defect(const Matrix& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

namespace {

// Strides of each subsystem in the flat index, leftmost factor slowest.
std::vector<Index> strides_of(const SpaceShape& shape) {
  std::vector<Index> s(shape.dims.size());
  Index acc = 1;
  for (Index k = shape.size() - 1; k >= 0; --k) {
    s[static_cast<size_t>(k)] = acc;
    acc *= shape.dims[static_cast<size_t>(k)];
  }
  return s;
}

}  // namespace

Matrix partial_trace(const Matrix& rho, const SpaceShape& shape,
                     const std::vector<int>& keep) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("partial_trace: matrix must be square");
  shape.check_factorizes(rho.rows());
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set empty");

  std::vector<bool> kept(shape.dims.size(), false);
  for (int k : keep) {
    if (k < 0 || k >= shape.size())
      throw std::invalid_argument("partial_trace: keep index out of range");
    kept[static_cast<size_t>(k)] = true;
  }

  const auto strides = strides_of(shape);
  std::vector<size_t> keep_idx, trace_idx;
  for (size_t k = 0; k < shape.dims.size(); ++k)
    (kept[k] ? keep_idx : trace_idx).push_back(k);

  Index dim_keep = 1;
  for (size_t k : keep_idx) dim_keep *= shape.dims[k];
  Index dim_trace = 1;
  for (size_t k : trace_idx) dim_trace *= shape.dims[k];

  // Flat index of a (kept, traced) multi-index pair.
  auto flat = [&](Index kv, Index tv) {
    Index idx = 0;
    for (size_t p = keep_idx.size(); p-- > 0;) {
      size_t k = keep_idx[p];
      idx += (kv % shape.dims[k]) * strides[k];
      kv /= shape.dims[k];
    }
    for (size_t p = trace_idx.size(); p-- > 0;) {
      size_t k = trace_idx[p];
      idx += (tv % shape.dims[k]) * strides[k];
      tv /= shape.dims[k];
    }
    return idx;
  };

  Matrix out = Matrix::Zero(dim_keep, dim_keep);
  for (Index a = 0; a < dim_keep; ++a)
    for (Index b = 0; b < dim_keep; ++b) {
      Complex acc = 0.0;
      for (Index t = 0; t < dim_trace; ++t) acc += rho(flat(a, t), flat(b, t));
      out(a, b) = acc;
    }
  return out;
}

Matrix partial_transpose(const Matrix& rho, const SpaceShape& shape, int subsystem) {
  if (rho.rows() != rho.cols())
    throw std::invalid_argument("partial_transpose: matrix must be square");
  shape.check_factorizes(rho.rows());
  if (subsystem < 0 || subsystem >= shape.size())
    throw std::invalid_argument("partial_transpose: subsystem out of range");

  const auto strides = strides_of(shape);
  const Index d_s = shape.dims[static_cast<size_t>(subsystem)];
  const Index stride = strides[static_cast<size_t>(subsystem)];
  const Index dim = rho.rows();

  Matrix out(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    const Index i_s = (i / stride) % d_s;
    const Index i_rest = i - i_s * stride;
    for (Index j = 0; j < dim; ++j) {
      const Index j_s = (j / stride) % d_s;
      const Index j_rest = j - j_s * stride;
      out(i_rest + j_s * stride, j_rest + i_s * stride) = rho(i, j);
    }
  }
  return out;
}

EigResult herm_eig(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("herm_eig: matrix must be square");
  if (hermiticity_defect(a) > kHermiticityTol)
    throw std::invalid_argument("herm_eig: input not Hermitian within tolerance");
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("herm_eig: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix expm(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("expm: matrix must be square");
  const Index n = a.rows();
  const double norm = a.cwiseAbs().rowwise().sum().maxCoeff();

  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }

  // Taylor series on the scaled matrix; with ||X|| <= 0.5 the tail past
  // 24 terms is far below double precision.
  const Matrix x = a * scale;
  Matrix term = Matrix::Identity(n, n);
  Matrix sum = term;
  for (int k = 1; k <= 24; ++k) {
    term = (term * x) / static_cast<double>(k);
    sum += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int k = 0; k < squarings; ++k) sum = sum * sum;
  return sum;
}

double trace_norm(const Matrix& a) {
  return herm_eig(a).eigenvalues.cwiseAbs().sum();
}

}  // namespace qrnet
