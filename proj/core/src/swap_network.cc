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

#include "savqe/swap_network.h"

#include <algorithm>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace savqe {
namespace {

bool adjacent_on_ring(int a, int b, int n) {
  return (b == (a + 1) % n) || (a == (b + 1) % n);
}

// Link index b of the ring bond (b, b+1 mod n).
int link_of(int a, int b, int n) {
  return (b == (a + 1) % n) ? a : b;
}

}  // namespace

SwapNetwork::SwapNetwork(int n_sites, std::vector<Transposition> transpositions)
    : n_sites_(n_sites), transpositions_(std::move(transpositions)) {
  if (n_sites < 2) throw std::invalid_argument("swap network needs >= 2 sites");
  std::vector<int> busy_until(n_sites, 0);
  for (const auto& [a, b] : transpositions_) {
    if (a < 0 || b < 0 || a >= n_sites || b >= n_sites || a == b ||
        !adjacent_on_ring(a, b, n_sites)) {
      throw std::invalid_argument("transposition (" + std::to_string(a) + ", " +
                                  std::to_string(b) +
                                  ") is not a nearest-neighbour pair");
    }
    const int step = std::max(busy_until[a], busy_until[b]);
    if (step == static_cast<int>(layers_.size())) layers_.emplace_back();
    layers_[step].push_back({a, b});
    busy_until[a] = busy_until[b] = step + 1;
  }
}

Permutation SwapNetwork::composed() const {
  Permutation p = Permutation::identity(n_sites_);
  for (const auto& [a, b] : transpositions_) {
    p = Permutation::transposition(n_sites_, a, b).after(p);
  }
  return p;
}

std::string SwapNetwork::to_listing() const {
  std::ostringstream os;
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    if (l) os << '\n';
    for (const auto& [a, b] : layers_[l]) os << "swap " << a << ' ' << b << '\n';
  }
  return os.str();
}

SwapNetwork SwapNetwork::parse_listing(int n_sites, const std::string& text) {
  std::vector<Transposition> ts;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::string word;
    int a = -1;
    int b = -1;
    if (!(ls >> word >> a >> b) || word != "swap") {
      throw std::invalid_argument("bad listing line: '" + line + "'");
    }
    ts.emplace_back(a, b);
  }
  return SwapNetwork(n_sites, std::move(ts));
}

SwapNetwork amida_decompose(const Permutation& target) {
  const int n = target.size();
  // dest[pos] is where the one-qubit state now at pos has to end up.
  std::vector<int> dest = target.image();
  std::vector<SwapNetwork::Transposition> ts;
  for (int pass = 0; !std::is_sorted(dest.begin(), dest.end()); ++pass) {
    for (int i = pass % 2; i + 1 < n; i += 2) {
      if (dest[i] > dest[i + 1]) {
        std::swap(dest[i], dest[i + 1]);
        ts.emplace_back(i, i + 1);
      }
    }
  }
  return SwapNetwork(n, std::move(ts));
}

Permutation long_range_swap(int n_sites, int r) {
  if (r < 1 || r + 1 > n_sites) {
    throw std::invalid_argument("long-range distance out of range");
  }
  return Permutation::transposition(n_sites, 1, r);
}

SwapCount swap_count_bound(int r) {
  if (r < 2 || r % 2 != 0) {
    throw std::invalid_argument("swap_count_bound needs an even r >= 2");
  }
  // ceil(r/2 - 1/2) = ceil((r-1)/2) = (r-1+1)/2 for integer r.
  return {2 * r - 3, r - 1, r / 2};
}

SwapEmbedding theta_swap_params(const Ansatz& ansatz,
                                const SwapNetwork& network) {
  const int n = ansatz.n_qubits();
  if (network.n_sites() != n) {
    throw std::invalid_argument("network and ansatz sizes differ");
  }
  SwapEmbedding out{zero_params(ansatz), 0, cplx{1.0, 0.0}};
  std::vector<int> last_slot(n, -1);
  int max_slot = -1;
  for (const auto& [a, b] : network.transpositions()) {
    const int link = link_of(a, b, n);
    const int parity = (link % 2 == 1) ? 0 : 1;
    int slot = std::max(last_slot[a], last_slot[b]) + 1;
    if (slot % 2 != parity) ++slot;
    const int layer = slot / 2;
    if (layer >= ansatz.n_layers()) {
      throw std::invalid_argument(
          "ansatz depth " + std::to_string(ansatz.n_layers()) +
          " is too shallow for this swap network");
    }
    out.params[ansatz.param_index(layer, link)] = std::numbers::pi;
    last_slot[a] = last_slot[b] = slot;
    max_slot = std::max(max_slot, slot);
    out.phase *= cplx{0.0, -1.0};
  }
  out.layers_used = (max_slot + 2) / 2;
  return out;
}

}  // namespace savqe
