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
#include <string>
#include <vector>

namespace savqe {

/// Bijection on sites {0, ..., n-1}. image(i) is the site that receives the
/// one-qubit state currently held at site i.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `image` is a bijection.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);
  /// Exchange of two sites.
  static Permutation transposition(int n, int a, int b);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int site) const { return image_[site]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  /// The permutation that applies `first`, then *this.
  Permutation after(const Permutation& first) const;
  bool is_identity() const;

  /// Moves bit i of a basis index to bit image(i).
  std::uint64_t apply_to_index(std::uint64_t index) const;

  /// "a,b,c,..." listing of the images.
  std::string to_string() const;
  /// Parses the to_string() format.
  static Permutation parse(const std::string& text);

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

}  // namespace savqe
