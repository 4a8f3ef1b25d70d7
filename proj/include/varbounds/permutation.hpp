// Copyright 2026 The varbounds Authors
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

#ifndef VARBOUNDS_PERMUTATION_HPP_
#define VARBOUNDS_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace varbounds {

// Bijection of {0, ..., n-1}; pi(i) = images()[i].
class Permutation {
 public:
  Permutation() = default;
  // Throws ValidationError unless images is a bijection of {0..n-1}.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);
  // The n-cycle (1 2 ... n): i -> i + 1 mod n.
  static Permutation cycle(std::size_t n);
  // i -> n - 1 - i
  static Permutation reversal(std::size_t n);
  // Transposition of a and b.
  static Permutation swap(std::size_t n, std::size_t a, std::size_t b);

  std::size_t size() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  std::span<const std::size_t> images() const { return images_; }

  Permutation inverse() const;
  // (this o other)(i) = this(other(i))
  Permutation compose(const Permutation& other) const;
  bool is_identity() const;

  // Advances to the lexicographically next permutation; returns false (and
  // wraps to the identity) after the last one.
  bool next();

  // out[i] = values[pi(i)]
  template <typename T>
  std::vector<T> apply(std::span<const T> values) const {
    std::vector<T> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[images_[i]];
    return out;
  }

  // One-based image list, e.g. "[2 3 1]".
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<std::size_t> images_;
};

}  // namespace varbounds

#endif  // VARBOUNDS_PERMUTATION_HPP_
