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
#include <ostream>
#include <string>
#include <string_view>

#include "savqe/optimizer.h"

namespace savqe {

inline constexpr std::string_view kVersion = "0.1.0";

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view text);

/// "# savqe <version> config_hash=<16 hex digits>"; the hash covers the
/// canonical config text.
std::string metadata_line(std::string_view canonical_config);

/// Header "k,energy_per_site,norm,fidelity,grad_norm". An absent fidelity is
/// an empty field.
void write_trace_csv(std::ostream& os, const OptTrace& trace);

/// Header "m,q,energy_per_site,ground_energy_per_site,delta_e,norm,fidelity,exact_delta_e".
/// delta_e and exact_delta_e are in units of J, not per site. NaN prints as "nan".
void write_excitation_csv(std::ostream& os, const ExcitedResult& result,
                          int n_sites, double coupling);

}  // namespace savqe
