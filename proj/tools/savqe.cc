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

// savqe: command-line runner for symmetry-adapted VQE experiments.

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.h"

namespace {

using savqe::cli::RunConfig;
using Command = std::function<int(const RunConfig&, std::ostream&, std::ostream&)>;

void add_ring_options(CLI::App* app, RunConfig& c) {
  app->add_option("--n-sites", c.n_sites, "Number of ring sites (even)")
      ->capture_default_str();
  app->add_option("--coupling", c.coupling, "Exchange coupling J > 0")
      ->capture_default_str();
}

void add_vqe_options(CLI::App* app, RunConfig& c) {
  add_ring_options(app, c);
  app->add_option("--layers", c.n_layers, "Ansatz layers D")->capture_default_str();
  app->add_option("--alpha", c.alpha, "Learning rate in units of 1/J")
      ->capture_default_str();
  app->add_option("--iters", c.iters, "NGD iterations k_max")->capture_default_str();
  app->add_option("--seed", c.seed, "Seed for the initial angles")
      ->capture_default_str();
  app->add_option("--eps-reg", c.eps_reg, "Initial metric regularization")
      ->capture_default_str();
}

/// Replaces "--config FILE" with the options it holds, placed right after the
/// subcommand so that explicit flags override them. Keys may be flat or sit
/// in a [subcommand] section; sections for other subcommands are skipped.
std::vector<std::string> expand_config(std::vector<std::string> args,
                                       const std::vector<std::string>& subcommands) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[i + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i), args.begin() + static_cast<std::ptrdiff_t>(i + 2));
      break;
    }
    if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    }
  }
  if (path.empty()) return args;
  const auto sub = std::find_first_of(args.begin(), args.end(), subcommands.begin(),
                                      subcommands.end());
  if (sub == args.end()) throw std::invalid_argument("--config needs a subcommand");
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file " + path);

  std::vector<std::string> extra;
  for (const CLI::ConfigItem& item : CLI::ConfigINI().from_config(in)) {
    if (item.name == "++" || item.name == "--") continue;  // section markers
    if (!item.parents.empty() && item.parents != std::vector<std::string>{*sub}) continue;
    if (item.inputs.size() == 1 && (item.inputs[0] == "true" || item.inputs[0] == "false")) {
      if (item.inputs[0] == "true") extra.push_back("--" + item.name);
      continue;
    }
    extra.push_back("--" + item.name);
    extra.insert(extra.end(), item.inputs.begin(), item.inputs.end());
  }
  args.insert(sub + 1, extra.begin(), extra.end());
  return args;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry-adapted VQE for the Heisenberg ring"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  // Handled by expand_config before parsing; declared for --help.
  std::string config_file;
  app.add_option("--config", config_file,
                 "Read options from a key = value file; later flags override it");

  RunConfig c;
  std::map<CLI::App*, Command> commands;

  auto* ground = app.add_subcommand("ground", "Optimize the lowest state of one sector");
  add_vqe_options(ground, c);
  ground->add_option("--sector", c.sector, "Momentum index m, q = 2 pi m / N")
      ->capture_default_str();
  ground->add_option("--reference", c.reference, "Reference state: singlet or triplet")
      ->capture_default_str();
  ground->add_flag("--no-symmetry", c.no_symmetry, "Skip the momentum projection");
  ground->add_option("--out", c.out, "Trace CSV path (default stdout)");
  commands[ground] = savqe::cli::cmd_ground;

  auto* excited = app.add_subcommand("excited", "Triplet excitation energy for every momentum");
  add_vqe_options(excited, c);
  excited->add_option("--threads", c.threads, "Worker threads (0 = hardware)")
      ->capture_default_str();
  excited->add_option("--restarts", c.restarts,
                      "Starts per sector from consecutive seeds; lowest energy kept")
      ->capture_default_str();
  excited->add_option("--out", c.out, "Excitation CSV path (default stdout)");
  commands[excited] = savqe::cli::cmd_excited;

  auto* exact = app.add_subcommand("exact", "Lanczos energies for every (q, S_z in {0, 1})");
  add_ring_options(exact, c);
  exact->add_option("--out", c.out, "Spectrum CSV path (default stdout)");
  commands[exact] = savqe::cli::cmd_exact;

  auto* hadamard = app.add_subcommand("hadamard", "Sampled Hadamard test of <X1 X2> at N = 4");
  hadamard->add_option("--samples", c.samples, "Number of samples")->capture_default_str();
  hadamard->add_option("--shots", c.shots, "Shots per sample")->capture_default_str();
  hadamard->add_option("--seed", c.seed, "Sampling seed")->capture_default_str();
  hadamard->add_option("--out", c.out, "Table path (default stdout)");
  commands[hadamard] = savqe::cli::cmd_hadamard;

  auto* compile = app.add_subcommand("compile-perm", "Nearest-neighbour swap network for a permutation");
  compile->add_option("--n-sites", c.n_sites, "Number of ring sites")->capture_default_str();
  compile->add_option("--perm", c.perm, "Image of each site, e.g. 0,2,1,3");
  compile->add_option("--range", c.range, "Long-range swap of 0-based qubits 1 and r");
  compile->add_option("--out", c.out, "Listing path (default stdout)");
  commands[compile] = savqe::cli::cmd_compile_perm;

  auto* verify = app.add_subcommand("verify", "Run the built-in identity checks");
  commands[verify] = savqe::cli::cmd_verify;

  std::vector<std::string> args;
  try {
    std::vector<std::string> names;
    for (const auto& entry : commands) names.push_back(entry.first->get_name());
    args = expand_config(std::vector<std::string>(argv + 1, argv + argc), names);
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  for (const auto& [sub, run] : commands) {
    if (!sub->parsed()) continue;
    c.mode = sub->get_name();
    try {
      if (c.out.empty()) return run(c, std::cout, std::cerr);
      std::ofstream file(c.out);
      if (!file) {
        std::cerr << "error: cannot open " << c.out << " for writing\n";
        return 1;
      }
      const int code = run(c, file, std::cout);
      file.close();
      if (!file) {
        std::cerr << "error: failed writing " << c.out << '\n';
        return 1;
      }
      return code;
    } catch (const savqe::cli::UsageError& e) {
      std::cerr << "usage error: " << e.what() << '\n';
      return 2;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return 1;
    }
  }
  return 1;
}
