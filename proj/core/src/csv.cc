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

#include "savqe/csv.h"

#include <cmath>
#include <cstdio>

namespace savqe {
namespace {

// Fixed %.12g formatting, so output does not depend on stream state.
std::string num(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string metadata_line(std::string_view canonical_config) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(canonical_config)));
  return "# savqe " + std::string(kVersion) + " config_hash=" + buf;
}

void write_trace_csv(std::ostream& os, const OptTrace& trace) {
  os << "k,energy_per_site,norm,fidelity,grad_norm\n";
  for (const TraceRow& r : trace) {
    os << r.k << ',' << num(r.energy_per_site) << ',' << num(r.norm) << ',';
    if (r.fidelity) os << num(*r.fidelity);
    os << ',' << num(r.grad_norm) << '\n';
  }
}

void write_excitation_csv(std::ostream& os, const ExcitedResult& result,
                          int n_sites, double coupling) {
  const double jn = coupling * n_sites;
  os << "m,q,energy_per_site,ground_energy_per_site,delta_e,norm,fidelity,"
        "exact_delta_e\n";
  for (const ExcitedRow& r : result.rows) {
    os << r.q_index << ',' << num(r.q) << ',' << num(r.triplet_energy / jn) << ','
       << num(r.ground_energy / jn) << ',' << num(r.delta_e / coupling) << ','
       << num(r.norm) << ',';
    if (r.fidelity) os << num(*r.fidelity);
    os << ',' << num(r.exact_delta_e / coupling) << '\n';
  }
}

}  // namespace savqe
