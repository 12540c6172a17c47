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

#include "qrnet/readout.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qrnet {

namespace {

double real_trace_product(const Matrix& rho, const Matrix& op) {
  const Complex tr = (rho * op).trace();
  if (std::abs(tr.imag()) > 1e-10)
    throw std::runtime_error("feature extraction: imaginary residue beyond 1e-10");
  return tr.real();
}

}  // namespace

FeatureVector singlet_features(const Matrix& reservoir_rho,
                               const std::vector<Matrix>& projectors) {
  FeatureVector fv;
  fv.kind = BasisKind::singlet;
  fv.values.resize(static_cast<Index>(projectors.size()));
  for (size_t i = 0; i < projectors.size(); ++i)
    fv.values(static_cast<Index>(i)) = real_trace_product(reservoir_rho, projectors[i]);
  return fv;
}

FeatureVector population_features(const Matrix& reservoir_rho,
                                  const CompositeSpace& space) {
  FeatureVector fv;
  fv.kind = BasisKind::population;
  fv.values.resize(space.n_sites());
  for (int j = 0; j < space.n_sites(); ++j)
    fv.values(j) = real_trace_product(reservoir_rho, number_op(j, space));
  return fv;
}

ReadoutModel fit(const std::vector<FeatureVector>& features,
                 const std::vector<int>& labels, double ridge, bool intercept) {
  if (features.size() != labels.size())
    throw std::invalid_argument("fit: features/labels size mismatch");
  if (features.size() < 2) throw std::invalid_argument("fit: need at least 2 samples");
  bool has0 = false, has1 = false;
  for (int y : labels) (y == 0 ? has0 : has1) = true;
  if (!has0 || !has1)
    throw std::invalid_argument("fit: both classes must be present");
  const BasisKind kind = features.front().kind;
  const Index p = features.front().values.size();
  for (const FeatureVector& f : features)
    if (f.kind != kind || f.values.size() != p)
      throw std::invalid_argument("fit: inconsistent feature vectors");

  const Index n = static_cast<Index>(features.size());
  const Index cols = intercept ? p + 1 : p;
  RealMatrix x(n, cols);
  RealVector y(n);
  for (Index i = 0; i < n; ++i) {
    x.row(i).head(p) = features[static_cast<size_t>(i)].values.transpose();
    if (intercept) x(i, p) = 1.0;
    y(i) = static_cast<double>(labels[static_cast<size_t>(i)]);
  }

  RealVector beta;
  if (ridge > 0.0) {
    RealMatrix gram = x.transpose() * x;
    for (Index j = 0; j < p; ++j) gram(j, j) += ridge;  // intercept unpenalized
    beta = gram.ldlt().solve(x.transpose() * y);
  } else {
    beta = x.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(y);
  }

  ReadoutModel model;
  model.weights = beta.head(p);
  model.bias = intercept ? beta(p) : 0.0;
  model.kind = kind;
  model.ridge = ridge;
  model.intercept = intercept;
  return model;
}

double predict(const ReadoutModel& model, const FeatureVector& features) {
  if (features.kind != model.kind)
    throw std::invalid_argument("predict: feature basis does not match model");
  return model.weights.dot(features.values) + model.bias;
}

int classify(const ReadoutModel& model, const FeatureVector& features) {
  return predict(model, features) >= model.threshold ? 1 : 0;
}

double relative_error(const ReadoutModel& model,
                      const std::vector<FeatureVector>& features,
                      const std::vector<int>& labels) {
  if (features.empty() || features.size() != labels.size())
    throw std::invalid_argument("relative_error: empty or mismatched test set");
  int wrong = 0;
  for (size_t i = 0; i < features.size(); ++i)
    if (classify(model, features[i]) != labels[i]) ++wrong;
  return static_cast<double>(wrong) / static_cast<double>(features.size());
}

void save_model(std::ostream& os, const ReadoutModel& model,
                const std::vector<uint64_t>& seeds) {
  char buf[64];
  os << "basis " << (model.kind == BasisKind::singlet ? "singlet" : "population")
     << "\n";
  os << "weights";
  for (Index j = 0; j < model.weights.size(); ++j) {
    std::snprintf(buf, sizeof(buf), " %.17g", model.weights(j));
    os << buf;
  }
  os << "\n";
  std::snprintf(buf, sizeof(buf), "%.17g", model.bias);
  os << "bias " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.17g", model.threshold);
  os << "threshold " << buf << "\n";
  std::snprintf(buf, sizeof(buf), "%.17g", model.ridge);
  os << "ridge " << buf << "\n";
  os << "intercept " << (model.intercept ? 1 : 0) << "\n";
  os << "seeds";
  for (uint64_t s : seeds) os << " " << s;
  os << "\n";
}

}  // namespace qrnet
