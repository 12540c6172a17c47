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

#include "qrnet/experiments.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace qrnet {

namespace {

namespace fs = std::filesystem;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::ofstream open_out(const fs::path& path) {
  std::ofstream os(path, std::ios::binary);  // binary keeps LF endings everywhere
  if (!os) throw std::runtime_error("cannot open output file " + path.string());
  return os;
}

void write_trajectory_csv(const fs::path& path, const std::string& value_prefix,
                          const Trajectory& traj) {
  std::ofstream os = open_out(path);
  os << "t";
  for (Index j = 0; j < traj.values.cols(); ++j) os << "," << value_prefix << j;
  os << "\n";
  for (size_t r = 0; r < traj.times.size(); ++r) {
    os << fmt(traj.times[r]);
    for (Index j = 0; j < traj.values.cols(); ++j)
      os << "," << fmt(traj.values(static_cast<Index>(r), j));
    os << "\n";
  }
}

struct RunSetup {
  ReservoirParams reservoir;
  CouplingParams coupling;
  EvolutionConfig evo;
  Matrix rho_equilibrated;
};

ReservoirParams sample_reservoir_with_config(const ExperimentConfig& config,
                                             Rng& rng) {
  ReservoirParams params = sample_reservoir(rng, config.p_ratio);
  if (config.gamma_override >= 0.0) {
    params.gamma = config.gamma_override;
    params.pump = config.p_ratio * params.gamma;
  }
  return params;
}

RunSetup prepare_run(const ExperimentConfig& config, int run) {
  RunSetup setup;
  Rng rng_j = make_stream(config.seed, StreamPurpose::reservoir_couplings, run);
  setup.reservoir = sample_reservoir_with_config(config, rng_j);

  setup.evo.dt_safety = config.dt_safety;
  setup.evo.t_equilibration = config.t_equilibration(setup.reservoir.gamma);
  setup.evo.t_reading = config.t_reading(setup.reservoir.gamma);

  Rng rng_w = make_stream(config.seed, StreamPurpose::input_weights, run);
  setup.coupling = sample_coupling(rng_w, config.f, setup.evo.t_reading);

  Matrix ground = Matrix::Zero(64, 64);
  ground(0, 0) = 1.0;
  setup.rho_equilibrated = equilibrate(ground, setup.reservoir, setup.evo).rho;
  return setup;
}

std::vector<Matrix> reservoir_observables(const ExperimentConfig& config) {
  if (config.basis == BasisKind::singlet)
    return singlet_projectors(build_singlet_basis(6));
  std::vector<Matrix> obs;
  const CompositeSpace space = CompositeSpace::qubits(6);
  for (int j = 0; j < 6; ++j) obs.push_back(number_op(j, space));
  return obs;
}

FeatureVector features_from_values(const ExperimentConfig& config,
                                   RealVector values) {
  return {std::move(values), config.basis};
}

// Random product of pure single-qubit states (Haar vectors).
Matrix random_pure_product(Rng& rng) {
  Matrix rho = Matrix::Identity(1, 1);
  for (int j = 0; j < 6; ++j) {
    Vector psi(2);
    psi(0) = rng.normal_complex();
    psi(1) = rng.normal_complex();
    psi.normalize();
    rho = kron(rho, Matrix(psi * psi.adjoint()));
  }
  return rho;
}

}  // namespace

Rng make_stream(uint64_t seed, StreamPurpose purpose, int run) {
  return Rng(seed, (static_cast<uint64_t>(purpose) << 32) |
                       static_cast<uint64_t>(static_cast<uint32_t>(run)));
}

TeacherState make_teacher_sample(const ExperimentConfig& config, Rng rng,
                                 int index) {
  Rng sample_rng = rng.split(static_cast<uint64_t>(index));
  const bool product = index % 2 == 0;
  if (config.method == Method::two_qubit)
    return product ? random_product_two_qubit(sample_rng)
                   : random_entangled_two_qubit(sample_rng, config.nu_min);
  return product ? random_product_fock(sample_rng, config.n_fock)
                 : random_squeezed_thermal(sample_rng, config.n_fock, config.nu_min);
}

int cmd_equilibrate(const ExperimentConfig& config, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  Rng rng_j = make_stream(config.seed, StreamPurpose::reservoir_couplings, 0);
  const ReservoirParams params = sample_reservoir_with_config(config, rng_j);
  EvolutionConfig evo;
  evo.dt_safety = config.dt_safety;
  evo.t_equilibration = config.t_equilibration(params.gamma);

  Matrix ground = Matrix::Zero(64, 64);
  ground(0, 0) = 1.0;
  const EquilibrationResult from_ground =
      equilibrate(ground, params, evo, config.stride);
  write_trajectory_csv(out_dir / "equilibrate_ground.csv", "n_",
                       from_ground.populations);

  Rng rng_init = make_stream(config.seed, StreamPurpose::initial_states, 0);
  const EquilibrationResult from_random =
      equilibrate(random_pure_product(rng_init), params, evo, config.stride);
  write_trajectory_csv(out_dir / "equilibrate_random.csv", "n_",
                       from_random.populations);
  return 0;
}

int cmd_traces(const ExperimentConfig& config, const fs::path& out_dir) {
  fs::create_directories(out_dir);
  const RunSetup setup = prepare_run(config, 0);
  const auto observables = reservoir_observables(config);
  const std::string prefix = config.basis == BasisKind::singlet ? "m_" : "n_";
  const CompositeSpace joint = CompositeSpace::reservoir_with_teacher(
      config.method == Method::two_qubit ? 2 : config.n_fock);
  const std::vector<int> keep = {0, 1, 2, 3, 4, 5};

  Rng rng = make_stream(config.seed, StreamPurpose::train_samples, 0);
  for (int index : {1, 0}) {  // odd = entangled, even = product
    const TeacherState teacher = make_teacher_sample(config, rng, index);
    Trajectory traj;
    std::vector<std::array<double, 8>> rows;
    int step = 0;
    auto record = [&](double t, const Matrix& rho_joint) {
      const Matrix rho_res = partial_trace(rho_joint, joint.shape, keep);
      std::array<double, 8> row{};
      row[0] = t;
      for (size_t i = 0; i < observables.size(); ++i)
        row[i + 1] = (rho_res * observables[i]).trace().real();
      rows.push_back(row);
    };
    record(0.0, kron(setup.rho_equilibrated, teacher.rho));
    read_teacher(setup.rho_equilibrated, teacher, setup.coupling, setup.reservoir,
                 setup.evo, [&](double t, const Matrix& rho_joint) {
                   ++step;
                   if (step % config.stride == 0) record(t, rho_joint);
                 });
    traj.times.resize(rows.size());
    traj.values.resize(static_cast<Index>(rows.size()),
                       static_cast<Index>(observables.size()));
    for (size_t r = 0; r < rows.size(); ++r) {
      traj.times[r] = rows[r][0];
      for (size_t i = 0; i < observables.size(); ++i)
        traj.values(static_cast<Index>(r), static_cast<Index>(i)) = rows[r][i + 1];
    }
    const char* name =
        index % 2 == 1 ? "traces_entangled.csv" : "traces_product.csv";
    write_trajectory_csv(out_dir / name, prefix, traj);
  }
  return 0;
}

int cmd_learn(const ExperimentConfig& config, const fs::path& out_dir,
              LearnResult* result_out) {
  const auto t_start = std::chrono::steady_clock::now();
  fs::create_directories(out_dir);

  std::vector<int> sizes = config.train_sizes;
  if (sizes.empty()) sizes = {config.n_train};
  std::sort(sizes.begin(), sizes.end());
  const int max_size = sizes.back();
  const Index teacher_dim = config.method == Method::two_qubit ? 2 : config.n_fock;

  LearnResult result;
  result.per_run_errors.assign(sizes.size(), {});

  nlohmann::ordered_json record;
  {
    std::ostringstream cfg;
    config.echo(cfg);
    nlohmann::ordered_json cfg_json;
    std::istringstream lines(cfg.str());
    std::string line;
    while (std::getline(lines, line)) {
      const auto pos = line.find('=');
      if (pos != std::string::npos)
        cfg_json[line.substr(0, pos)] = line.substr(pos + 1);
    }
    record["config"] = std::move(cfg_json);
  }
  record["runs"] = nlohmann::ordered_json::array();

  ReadoutModel last_model;
  for (int run = 0; run < config.n_runs; ++run) {
    const RunSetup setup = prepare_run(config, run);
    const auto observables = reservoir_observables(config);

    // The reading map is linear in the teacher state, so with one equilibrated
    // reservoir per run each observable reduces to a fixed teacher-space
    // matrix; per-sample propagation is only needed when re-equilibrating.
    std::vector<Matrix> feature_ops;
    if (!config.reequilibrate_per_sample)
      feature_ops =
          teacher_feature_operators(setup.rho_equilibrated, observables,
                                    setup.coupling, setup.reservoir, setup.evo,
                                    teacher_dim);

    auto extract = [&](const TeacherState& teacher, int sample_index) {
      if (!config.reequilibrate_per_sample) {
        RealVector values(static_cast<Index>(feature_ops.size()));
        for (size_t i = 0; i < feature_ops.size(); ++i)
          values(static_cast<Index>(i)) =
              (teacher.rho * feature_ops[i]).trace().real();
        return features_from_values(config, std::move(values));
      }
      Rng rng_init = make_stream(config.seed, StreamPurpose::initial_states, run)
                         .split(static_cast<uint64_t>(sample_index));
      const Matrix rho_eq =
          equilibrate(random_pure_product(rng_init), setup.reservoir, setup.evo).rho;
      const Matrix rho_res = read_teacher(rho_eq, teacher, setup.coupling,
                                          setup.reservoir, setup.evo);
      RealVector values(static_cast<Index>(observables.size()));
      for (size_t i = 0; i < observables.size(); ++i)
        values(static_cast<Index>(i)) = (rho_res * observables[i]).trace().real();
      return features_from_values(config, std::move(values));
    };

    const Rng train_rng = make_stream(config.seed, StreamPurpose::train_samples, run);
    const Rng test_rng = make_stream(config.seed, StreamPurpose::test_samples, run);

    std::vector<FeatureVector> train_features, test_features;
    std::vector<int> train_labels, test_labels;
    std::vector<double> train_lognegs, test_lognegs;
    for (int i = 0; i < max_size; ++i) {
      const TeacherState teacher = make_teacher_sample(config, train_rng, i);
      train_features.push_back(extract(teacher, i));
      train_labels.push_back(static_cast<int>(teacher.label));
      train_lognegs.push_back(teacher.logneg);
    }
    for (int i = 0; i < config.n_test; ++i) {
      const TeacherState teacher = make_teacher_sample(config, test_rng, i);
      test_features.push_back(extract(teacher, max_size + i));
      test_labels.push_back(static_cast<int>(teacher.label));
      test_lognegs.push_back(teacher.logneg);
    }

    nlohmann::ordered_json run_json;
    run_json["run"] = run;
    run_json["gamma"] = setup.reservoir.gamma;
    run_json["train_lognegs"] = train_lognegs;
    run_json["train_labels"] = train_labels;
    run_json["test_lognegs"] = test_lognegs;
    run_json["test_labels"] = test_labels;
    run_json["errors"] = nlohmann::ordered_json::object();

    for (size_t s = 0; s < sizes.size(); ++s) {
      const int size = sizes[s];
      const std::vector<FeatureVector> sub_features(train_features.begin(),
                                                    train_features.begin() + size);
      const std::vector<int> sub_labels(train_labels.begin(),
                                        train_labels.begin() + size);
      const ReadoutModel model =
          fit(sub_features, sub_labels, config.ridge, config.intercept);
      const double err = relative_error(model, test_features, test_labels);
      result.per_run_errors[s].push_back(err);
      run_json["errors"][std::to_string(size)] = err;
      if (size == max_size) last_model = model;
    }
    record["runs"].push_back(std::move(run_json));
  }

  for (size_t s = 0; s < sizes.size(); ++s) {
    const auto& errs = result.per_run_errors[s];
    LearnPoint point;
    point.n_train = sizes[s];
    point.mean_error =
        std::accumulate(errs.begin(), errs.end(), 0.0) / static_cast<double>(errs.size());
    point.min_error = *std::min_element(errs.begin(), errs.end());
    point.max_error = *std::max_element(errs.begin(), errs.end());
    result.curve.push_back(point);
  }

  {
    std::ofstream os = open_out(out_dir / "learn_errors.csv");
    os << "n_train,mean_error,min_error,max_error\n";
    for (const LearnPoint& p : result.curve)
      os << p.n_train << "," << fmt(p.mean_error) << "," << fmt(p.min_error) << ","
         << fmt(p.max_error) << "\n";
  }
  {
    std::ofstream os = open_out(out_dir / "model.txt");
    save_model(os, last_model, {config.seed});
  }

  result.wall_clock_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  record["wall_clock_seconds"] = result.wall_clock_seconds;
  {
    std::ofstream os = open_out(out_dir / "run_record.json");
    os << record.dump(2) << "\n";
  }

  if (result_out != nullptr) *result_out = std::move(result);
  return 0;
}

int cmd_validate(const ExperimentConfig& config, std::ostream& os) {
  return print_validation(config, os) ? 0 : 1;
}

int cmd_dump_dfs(const fs::path& out_dir) {
  fs::create_directories(out_dir);
  std::ofstream os = open_out(out_dir / "dfs_basis.csv");
  dump_basis_csv(build_singlet_basis(6), os);
  return 0;
}

}  // namespace qrnet
