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
#include <string>
#include <vector>

#include "qrnet/config.hpp"
#include "qrnet/dfs.hpp"

namespace qrnet {

struct CheckResult {
  std::string id;
  bool pass;
  std::string detail;  // empty on pass
};

// Granular checks reused by tests with (possibly corrupted) fixtures; an empty
// return string means the check passed.
std::string check_singlet_basis(const SingletBasis& basis);
std::string check_collective_protection(const SingletBasis& basis);

// IDs of every registered invariant, in execution order.
std::vector<std::string> validation_ids();

// Runs the full invariant suite (DFS annihilation, Lindblad conservation laws,
// log-negativity oracles, unitarity checks) at the config's seed.
std::vector<CheckResult> run_validation(const ExperimentConfig& config);

// Prints one "PASS <id>" / "FAIL <id> <detail>" line per check plus a summary
// line; returns true when everything passed.
bool print_validation(const ExperimentConfig& config, std::ostream& os);

}  // namespace qrnet
