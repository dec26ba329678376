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

#include "savqe/optimizer.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <string>
#include <thread>

#include <Eigen/Cholesky>

#include "savqe/lanczos.h"

namespace savqe {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

Eigen::VectorXd to_eigen(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

TraceRow make_row(const VariationalProblem& problem, const Evaluation& ev, int k) {
  const double jn = problem.model().coupling() * problem.model().n_sites();
  return TraceRow{k, ev.energy / jn, ev.norm, ev.fidelity,
                  to_eigen(ev.gradient).norm()};
}

}  // namespace

Eigen::VectorXd solve_metric(const Eigen::MatrixXd& re_g,
                             const Eigen::VectorXd& grad,
                             const NgdOptions& options) {
  for (double eps = options.eps_reg; eps <= options.eps_reg_max * (1 + 1e-12);
       eps *= 10.0) {
    Eigen::MatrixXd a = re_g;
    a.diagonal().array() += eps;
    const Eigen::LLT<Eigen::MatrixXd> llt(a);
    if (llt.info() != Eigen::Success) continue;
    Eigen::VectorXd delta = llt.solve(grad);
    if (delta.allFinite()) return delta;
  }
  throw SolveError("metric solve failed up to eps_reg = " +
                   std::to_string(options.eps_reg_max));
}

TraceRow record(const VariationalProblem& problem, OptState& state) {
  const Evaluation ev = problem.evaluate(state.theta);
  state.trace.push_back(make_row(problem, ev, ++state.k));
  return state.trace.back();
}

OptState ngd_step(const VariationalProblem& problem, OptState state,
                  const NgdOptions& options) {
  if (!(options.alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
  const Evaluation ev = problem.evaluate(state.theta);
  state.trace.push_back(make_row(problem, ev, ++state.k));
  if (options.alpha == 0.0) return state;

  const Eigen::VectorXd grad = to_eigen(ev.gradient);
  const Eigen::VectorXd delta = solve_metric(ev.metric.real(), grad, options);
  const double scale = options.alpha / problem.model().coupling();
  for (Eigen::Index i = 0; i < delta.size(); ++i) state.theta[i] -= scale * delta[i];
  return state;
}

GroundResult run_ground(const GroundConfig& config) {
  if (config.k_max < 1) throw std::invalid_argument("k_max must be >= 1");
  const Ansatz ansatz(config.n_sites, config.n_layers);
  const HeisenbergRing model(config.n_sites, config.coupling);
  const bool triplet = config.reference == Reference::kTripletTail;
  SectorSpec spec =
      config.symmetrize
          ? SectorSpec::symmetrized(config.n_sites, config.q_index, config.reference)
          : SectorSpec::unsymmetrized(config.n_sites, config.reference);
  VariationalProblem problem(ansatz, spec, model);

  GroundResult result;
  if (config.with_fidelity && !triplet) {
    std::optional<SpectrumSector> sector;
    if (config.symmetrize) sector = SpectrumSector{config.q_index, 0.0};
    const SpectrumResult exact = lanczos_ground(model, sector);
    problem.set_target(exact.eigenvector);
    result.exact_energy = exact.energy;
  } else if (config.with_fidelity && config.symmetrize) {
    if (auto t = lowest_triplet(model, config.q_index)) {
      problem.set_target(t->eigenvector);
      result.exact_energy = t->energy;
    }
  }

  OptState state{0, random_params(ansatz, config.seed), {}};
  for (int k = 1; k < config.k_max; ++k) {
    state = ngd_step(problem, std::move(state), config.ngd);
    if (config.on_row) config.on_row(state.trace.back());
  }
  const TraceRow last = record(problem, state);
  if (config.on_row) config.on_row(last);

  result.trace = std::move(state.trace);
  result.theta = std::move(state.theta);
  result.energy = last.energy_per_site * config.coupling * config.n_sites;
  return result;
}

ExcitedResult run_excited(const ExcitedConfig& config) {
  const int n = config.n_sites;
  std::vector<int> qs = config.q_indices;
  if (qs.empty()) {
    for (int m = -n / 2 + 1; m <= n / 2; ++m) qs.push_back(m);
  }
  for (const int m : qs) MomentumSector(n, m);  // validates
  if (config.restarts < 1) throw std::invalid_argument("restarts must be >= 1");

  GroundConfig gc;
  gc.n_sites = n;
  gc.n_layers = config.n_layers;
  gc.coupling = config.coupling;
  gc.q_index = 0;
  gc.k_max = config.k_max;
  gc.seed = config.seed;
  gc.ngd = config.ngd;
  gc.with_fidelity = config.with_exact;

  ExcitedResult out;
  out.ground = run_ground(gc);
  for (int r = 1; r < config.restarts; ++r) {
    gc.seed = config.seed + r;
    GroundResult other = run_ground(gc);
    if (other.energy < out.ground.energy) out.ground = std::move(other);
  }
  const double e_ground = out.ground.energy;

  const Ansatz ansatz(n, config.n_layers);
  const HeisenbergRing model(n, config.coupling);
  std::optional<double> exact_ground = out.ground.exact_energy;

  out.rows.resize(qs.size());
  std::vector<std::exception_ptr> errors(qs.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (std::size_t idx = next++; idx < qs.size(); idx = next++) {
      try {
        const int m = qs[idx];
        ExcitedRow row{m, MomentumSector(n, m).q(), e_ground, kNaN, kNaN, 0.0,
                       std::nullopt, kNaN};
        VariationalProblem problem(
            ansatz, SectorSpec::symmetrized(n, m, Reference::kTripletTail), model);
        if (config.with_exact) {
          if (auto t = lowest_triplet(model, m)) {
            row.exact_delta_e = t->energy - *exact_ground;
            problem.set_target(t->eigenvector);
          }
        }
        try {
          for (int r = 0; r < config.restarts; ++r) {
            OptState state{0, random_params(ansatz, config.seed + r), {}};
            for (int k = 1; k < config.k_max; ++k) {
              state = ngd_step(problem, std::move(state), config.ngd);
            }
            const TraceRow last = record(problem, state);
            const double e = last.energy_per_site * config.coupling * n;
            if (r > 0 && !(e < row.triplet_energy)) continue;
            row.triplet_energy = e;
            row.delta_e = e - e_ground;
            row.norm = last.norm;
            row.fidelity = last.fidelity;
          }
        } catch (const NormFloorError&) {
          // The triplet reference has no component at this momentum.
        }
        out.rows[idx] = row;
      } catch (...) {
        errors[idx] = std::current_exception();
      }
    }
  };

  int threads = config.threads > 0
                    ? config.threads
                    : static_cast<int>(std::thread::hardware_concurrency());
  threads = std::clamp(threads, 1, static_cast<int>(qs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::sort(out.rows.begin(), out.rows.end(),
            [](const ExcitedRow& a, const ExcitedRow& b) { return a.q_index < b.q_index; });
  return out;
}

}  // namespace savqe
