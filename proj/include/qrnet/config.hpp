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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "qrnet/readout.hpp"
#include "qrnet/states.hpp"

namespace qrnet {

enum class Method { two_qubit, fock };

// How the duration coefficients of the parameter block are turned into
// simulation time: `gamma` reads T = coeff * gamma, `inverse` T = coeff / gamma.
enum class TimeUnits { gamma, inverse };

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Single source of truth for an experiment run; the shipped `paper-defaults`
// preset holds the parameter-block values.
struct ExperimentConfig {
  uint64_t seed = 9;
  Method method = Method::fock;
  BasisKind basis = BasisKind::singlet;
  int n_train = 16;  // must be even (alternating class construction)
  int n_test = 10;
  int n_runs = 5;
  std::vector<int> train_sizes;  // optional sweep; empty -> {n_train}

  // dynamics preset
  double gamma_override = -1.0;  // < 0 -> gamma = spectral radius of H_R
  double p_ratio = 0.5;
  double t_eq_coeff = 0.2;
  double t_read_coeff = 0.01;
  TimeUnits time_units = TimeUnits::gamma;
  double f = 10.0;
  double nu_min = kDefaultNuMin;
  int n_fock = 4;
  double dt_safety = 0.05;
  LognegFormula logneg = LognegFormula::trace_norm;

  // readout
  bool intercept = true;
  double ridge = 0.0;
  bool reequilibrate_per_sample = false;

  int stride = 1;  // trajectory sampling stride

  void validate() const;  // throws ConfigError

  double t_equilibration(double gamma) const;
  double t_reading(double gamma) const;

  void set(const std::string& key, const std::string& value);  // throws ConfigError
  static ExperimentConfig from_file(const std::string& path);
  void echo(std::ostream& os) const;
};

}  // namespace qrnet
