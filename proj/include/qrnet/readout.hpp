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
#include <vector>

#include "qrnet/dfs.hpp"

namespace qrnet {

enum class BasisKind { singlet, population };

struct FeatureVector {
  RealVector values;  // length 5 (singlet) or 6 (population)
  BasisKind kind;
};

struct ReadoutModel {
  RealVector weights;
  double bias = 0.0;
  double threshold = 0.5;
  BasisKind kind = BasisKind::singlet;
  double ridge = 0.0;
  bool intercept = true;
};

// m_I = Tr(rho P_I); imaginary residues above 1e-10 raise std::runtime_error.
FeatureVector singlet_features(const Matrix& reservoir_rho,
                               const std::vector<Matrix>& projectors);

// <n_i> = Tr(rho b_i^dag b_i) for every qubit of the space.
FeatureVector population_features(const Matrix& reservoir_rho,
                                  const CompositeSpace& space);

// Ordinary least squares onto the {0,1} labels, intercept included by default
// (ridge lambda penalizes the weights only). Rank deficiency is handled by the
// SVD minimum-norm solution. Throws std::invalid_argument on a single-class
// training set or fewer than two samples.
ReadoutModel fit(const std::vector<FeatureVector>& features,
                 const std::vector<int>& labels, double ridge = 0.0,
                 bool intercept = true);

double predict(const ReadoutModel& model, const FeatureVector& features);

// 1 if w.m + b >= threshold else 0 (ties go to class 1).
int classify(const ReadoutModel& model, const FeatureVector& features);

// Misclassified fraction of a nonempty test set.
double relative_error(const ReadoutModel& model,
                      const std::vector<FeatureVector>& features,
                      const std::vector<int>& labels);

// Plain-text model record; `seeds` identifies the reservoir instance the
// model was trained against.
void save_model(std::ostream& os, const ReadoutModel& model,
                const std::vector<uint64_t>& seeds);

}  // namespace qrnet
