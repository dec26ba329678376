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

#include "savqe/permutation.h"

#include <sstream>
#include <stdexcept>

namespace savqe {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("permutation must be non-empty");
  std::vector<bool> hit(n, false);
  for (int v : image_) {
    if (v < 0 || v >= n || hit[v]) {
      throw std::invalid_argument("permutation is not a bijection");
    }
    hit[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  return Permutation(std::move(image));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a == b) throw std::invalid_argument("transposition needs distinct sites");
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw std::invalid_argument("transposition site out of range");
  }
  image[a] = b;
  image[b] = a;
  return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[image_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::after(const Permutation& first) const {
  if (first.size() != size()) {
    throw std::invalid_argument("composing permutations of different sizes");
  }
  std::vector<int> image(image_.size());
  for (int i = 0; i < size(); ++i) image[i] = image_[first.image_[i]];
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (image_[i] != i) return false;
  }
  return true;
}

std::uint64_t Permutation::apply_to_index(std::uint64_t index) const {
  std::uint64_t out = 0;
  for (int i = 0; i < size(); ++i) {
    out |= ((index >> i) & 1u) << image_[i];
  }
  return out;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << image_[i];
  return os.str();
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> image;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      image.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) {
        throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("bad permutation entry '" + item + "'");
    }
  }
  return Permutation(std::move(image));
}

}  // namespace savqe
