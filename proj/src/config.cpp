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

#include "qrnet/config.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qrnet {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad number for '" + key + "': " + value);
  }
}

long parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("config: bad integer for '" + key + "': " + value);
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ConfigError("config: bad boolean for '" + key + "': " + value);
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n_train <= 0 || n_train % 2 != 0)
    throw ConfigError("config: n_train must be even and positive");
  for (int s : train_sizes)
    if (s <= 0 || s % 2 != 0)
      throw ConfigError("config: train_sizes entries must be even and positive");
  if (n_test <= 0) throw ConfigError("config: n_test must be positive");
  if (n_runs <= 0) throw ConfigError("config: runs must be positive");
  if (p_ratio < 0.0) throw ConfigError("config: p_ratio must be >= 0");
  if (dt_safety <= 0.0) throw ConfigError("config: dt_safety must be > 0");
  if (n_fock < 2) throw ConfigError("config: n_fock must be >= 2");
  if (nu_min <= 0.0 || nu_min > 1.0) throw ConfigError("config: nu_min out of (0,1]");
  if (stride <= 0) throw ConfigError("config: stride must be positive");
}

double ExperimentConfig::t_equilibration(double gamma) const {
  return time_units == TimeUnits::gamma ? t_eq_coeff * gamma : t_eq_coeff / gamma;
}

double ExperimentConfig::t_reading(double gamma) const {
  return time_units == TimeUnits::gamma ? t_read_coeff * gamma : t_read_coeff / gamma;
}

void ExperimentConfig::set(const std::string& key, const std::string& value) {
  if (key == "seed") {
    seed = static_cast<uint64_t>(std::stoull(value));
  } else if (key == "method") {
    if (value == "two_qubit") method = Method::two_qubit;
    else if (value == "fock") method = Method::fock;
    else throw ConfigError("config: method must be two_qubit or fock");
  } else if (key == "basis") {
    if (value == "singlet") basis = BasisKind::singlet;
    else if (value == "population") basis = BasisKind::population;
    else throw ConfigError("config: basis must be singlet or population");
  } else if (key == "n_train") {
    n_train = static_cast<int>(parse_int(key, value));
  } else if (key == "n_test") {
    n_test = static_cast<int>(parse_int(key, value));
  } else if (key == "runs") {
    n_runs = static_cast<int>(parse_int(key, value));
  } else if (key == "train_sizes") {
    train_sizes.clear();
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (!item.empty()) train_sizes.push_back(static_cast<int>(parse_int(key, item)));
    }
  } else if (key == "gamma") {
    gamma_override = value == "spectral" ? -1.0 : parse_double(key, value);
  } else if (key == "p_ratio") {
    p_ratio = parse_double(key, value);
  } else if (key == "t_eq_coeff") {
    t_eq_coeff = parse_double(key, value);
  } else if (key == "t_read_coeff") {
    t_read_coeff = parse_double(key, value);
  } else if (key == "time_units") {
    if (value == "gamma") time_units = TimeUnits::gamma;
    else if (value == "inverse") time_units = TimeUnits::inverse;
    else throw ConfigError("config: time_units must be gamma or inverse");
  } else if (key == "f") {
    f = parse_double(key, value);
  } else if (key == "nu_min") {
    nu_min = parse_double(key, value);
  } else if (key == "n_fock") {
    n_fock = static_cast<int>(parse_int(key, value));
  } else if (key == "dt_safety") {
    dt_safety = parse_double(key, value);
  } else if (key == "logneg") {
    if (value == "trace_norm") logneg = LognegFormula::trace_norm;
    else if (value == "literal") logneg = LognegFormula::literal;
    else throw ConfigError("config: logneg must be trace_norm or literal");
  } else if (key == "intercept") {
    intercept = parse_bool(key, value);
  } else if (key == "ridge") {
    ridge = parse_double(key, value);
  } else if (key == "reequilibrate") {
    reequilibrate_per_sample = parse_bool(key, value);
  } else if (key == "stride") {
    stride = static_cast<int>(parse_int(key, value));
  } else {
    throw ConfigError("config: unknown key '" + key + "'");
  }
}

ExperimentConfig ExperimentConfig::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  ExperimentConfig config;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config: missing '=' at " + path + ":" + std::to_string(lineno));
    config.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return config;
}

void ExperimentConfig::echo(std::ostream& os) const {
  char buf[64];
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  os << "seed=" << seed << "\n";
  os << "method=" << (method == Method::fock ? "fock" : "two_qubit") << "\n";
  os << "basis=" << (basis == BasisKind::singlet ? "singlet" : "population") << "\n";
  os << "n_train=" << n_train << "\n";
  os << "n_test=" << n_test << "\n";
  os << "runs=" << n_runs << "\n";
  os << "train_sizes=";
  for (size_t i = 0; i < train_sizes.size(); ++i)
    os << (i ? "," : "") << train_sizes[i];
  os << "\n";
  os << "gamma=" << (gamma_override < 0 ? "spectral" : num(gamma_override)) << "\n";
  os << "p_ratio=" << num(p_ratio) << "\n";
  os << "t_eq_coeff=" << num(t_eq_coeff) << "\n";
  os << "t_read_coeff=" << num(t_read_coeff) << "\n";
  os << "time_units=" << (time_units == TimeUnits::gamma ? "gamma" : "inverse") << "\n";
  os << "f=" << num(f) << "\n";
  os << "nu_min=" << num(nu_min) << "\n";
  os << "n_fock=" << n_fock << "\n";
  os << "dt_safety=" << num(dt_safety) << "\n";
  os << "logneg=" << (logneg == LognegFormula::trace_norm ? "trace_norm" : "literal")
     << "\n";
  os << "intercept=" << (intercept ? "true" : "false") << "\n";
  os << "ridge=" << num(ridge) << "\n";
  os << "reequilibrate=" << (reequilibrate_per_sample ? "true" : "false") << "\n";
  os << "stride=" << stride << "\n";
}

}  // namespace qrnet
