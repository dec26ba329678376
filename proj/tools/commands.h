// Copyright 2026 The savqe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace savqe::cli {

/// Bad user input; reported as a usage error.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string mode;
  int n_sites = 16;
  int n_layers = 1;
  double coupling = 1.0;
  int sector = 0;
  std::string reference = "singlet";
  double alpha = 0.1;
  int iters = 1000;
  std::uint64_t seed = 1;
  std::string out;
  double eps_reg = 1e-6;
  bool no_symmetry = false;
  int threads = 0;
  int restarts = 1;
  // hadamard
  int samples = 16;
  int shots = 1024;
  // compile-perm
  std::string perm;
  int range = 0;

  /// Sorted key=value lines of the fields that affect the given mode's output.
  std::string canonical() const;
};

/// Each command writes its CSV (or listing) to `data` and a human summary to
/// `log`, and returns the process exit code.
int cmd_ground(const RunConfig& config, std::ostream& data, std::ostream& log);
int cmd_excited(const RunConfig& config, std::ostream& data, std::ostream& log);
int cmd_exact(const RunConfig& config, std::ostream& data, std::ostream& log);
int cmd_hadamard(const RunConfig& config, std::ostream& data, std::ostream& log);
int cmd_compile_perm(const RunConfig& config, std::ostream& data, std::ostream& log);
int cmd_verify(const RunConfig& config, std::ostream& data, std::ostream& log);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// Matrix identity, swap-network and projector checks run by `verify`.
std::vector<CheckResult> run_checks();

}  // namespace savqe::cli
