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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qrnet/experiments.hpp"

namespace {

// Exit codes: 0 success, 1 invariant failure, 2 config error.
constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitConfig = 2;

struct CommonFlags {
  std::string config_path;
  std::string out_dir = "out";
  // raw override strings; only applied when the flag was given
  std::string seed, method, basis, n_train, n_test, runs;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "key=value config file");
  cmd->add_option("--seed", flags.seed, "RNG seed");
  cmd->add_option("--method", flags.method, "two_qubit|fock");
  cmd->add_option("--basis", flags.basis, "singlet|population");
  cmd->add_option("--n-train", flags.n_train, "training-set size (even)");
  cmd->add_option("--n-test", flags.n_test, "test-set size");
  cmd->add_option("--runs", flags.runs, "number of seeded runs");
  cmd->add_option("--out", flags.out_dir, "output directory");
}

qrnet::ExperimentConfig resolve(const CommonFlags& flags) {
  qrnet::ExperimentConfig config;
  if (!flags.config_path.empty())
    config = qrnet::ExperimentConfig::from_file(flags.config_path);
  if (!flags.seed.empty()) config.set("seed", flags.seed);
  if (!flags.method.empty()) config.set("method", flags.method);
  if (!flags.basis.empty()) config.set("basis", flags.basis);
  if (!flags.n_train.empty()) config.set("n_train", flags.n_train);
  if (!flags.n_test.empty()) config.set("n_test", flags.n_test);
  if (!flags.runs.empty()) config.set("runs", flags.runs);
  config.validate();
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"six-qubit quantum reservoir network simulator"};
  app.require_subcommand(1);

  CommonFlags flags;
  CLI::App* equilibrate = app.add_subcommand(
      "equilibrate", "population trajectories of the bare reservoir");
  CLI::App* traces = app.add_subcommand(
      "traces", "readout-feature trajectories during the reading window");
  CLI::App* learn =
      app.add_subcommand("learn", "training-size sweep with error curve output");
  CLI::App* validate =
      app.add_subcommand("validate", "run the invariant suite");
  CLI::App* dump_dfs =
      app.add_subcommand("dump-dfs", "write the singlet basis as CSV");
  for (CLI::App* cmd : {equilibrate, traces, learn, validate, dump_dfs})
    add_common(cmd, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    const qrnet::ExperimentConfig config = resolve(flags);
    if (equilibrate->parsed()) return qrnet::cmd_equilibrate(config, flags.out_dir);
    if (traces->parsed()) return qrnet::cmd_traces(config, flags.out_dir);
    if (learn->parsed()) return qrnet::cmd_learn(config, flags.out_dir);
    if (validate->parsed())
      return qrnet::cmd_validate(config, std::cout) == 0 ? kExitOk : kExitInvariant;
    if (dump_dfs->parsed()) return qrnet::cmd_dump_dfs(flags.out_dir);
  } catch (const qrnet::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return kExitOk;
}
