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

#include <filesystem>
#include <iosfwd>

#include "qrnet/config.hpp"
#include "qrnet/dynamics.hpp"
#include "qrnet/validate.hpp"

namespace qrnet {

// RNG stream layout: every random draw comes from
//   Rng(seed, (purpose << 32) | run).split(sample_index)
// so runs, purposes and samples are independent and reproducible.
enum class StreamPurpose : uint64_t {
  reservoir_couplings = 1,  // J
  input_weights = 2,        // W
  train_samples = 3,
  test_samples = 4,
  initial_states = 5,
};

Rng make_stream(uint64_t seed, StreamPurpose purpose, int run);

// One point of the learning sweep, aggregated over runs.
struct LearnPoint {
  int n_train = 0;
  double mean_error = 0.0;
  double min_error = 0.0;
  double max_error = 0.0;
};

struct LearnResult {
  std::vector<LearnPoint> curve;
  std::vector<std::vector<double>> per_run_errors;  // [size index][run]
  double wall_clock_seconds = 0.0;
};

// Fig. 2: population trajectories for ground-state and random-product starts.
int cmd_equilibrate(const ExperimentConfig& config,
                    const std::filesystem::path& out_dir);

// Fig. 3: singlet-expectation trajectories during the reading window for one
// entangled and one product teacher at a shared reservoir seed.
int cmd_traces(const ExperimentConfig& config,
               const std::filesystem::path& out_dir);

// Figs. 4-5: the training-size sweep. Writes learn_errors.csv and
// run_record.json into out_dir (see README for schemas).
int cmd_learn(const ExperimentConfig& config, const std::filesystem::path& out_dir,
              LearnResult* result_out = nullptr);

// Invariant suite; exit code 1 on any failure.
int cmd_validate(const ExperimentConfig& config, std::ostream& os);

int cmd_dump_dfs(const std::filesystem::path& out_dir);

// Teacher-sample generator shared by learn/traces: alternating classes, even
// indices product, odd indices entangled.
TeacherState make_teacher_sample(const ExperimentConfig& config, Rng rng, int index);

}  // namespace qrnet
