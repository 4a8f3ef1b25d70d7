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


#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "varbounds/errors.hpp"
#include "varbounds/permutation.hpp"
#include "varbounds/random.hpp"

namespace varbounds {
namespace {

TEST(PermutationTest, Validation) {
  EXPECT_THROW(Permutation({0, 0}), ValidationError);
  EXPECT_THROW(Permutation({0, 2}), ValidationError);
  EXPECT_NO_THROW(Permutation({1, 0}));
}

TEST(PermutationTest, Constructors) {
  EXPECT_EQ(Permutation::cycle(3).to_string(), "[2 3 1]");
  EXPECT_EQ(Permutation::reversal(3).to_string(), "[3 2 1]");
  EXPECT_EQ(Permutation::swap(3, 0, 2).to_string(), "[3 2 1]");
  EXPECT_TRUE(Permutation::identity(4).is_identity());
}

TEST(PermutationTest, InverseAndCompose) {
  const Permutation p({2, 0, 3, 1});
  EXPECT_TRUE(p.compose(p.inverse()).is_identity());
  EXPECT_TRUE(p.inverse().compose(p).is_identity());
  const Permutation c = Permutation::cycle(4);
  const Permutation pc = p.compose(c);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(pc(i), p(c(i)));
}

TEST(PermutationTest, NextEnumeratesAll) {
  Permutation p = Permutation::identity(4);
  std::set<std::vector<std::size_t>> seen;
  do {
    seen.emplace(p.images().begin(), p.images().end());
  } while (p.next());
  EXPECT_EQ(seen.size(), 24u);
  EXPECT_TRUE(p.is_identity());
}

TEST(PermutationTest, Apply) {
  const std::vector<double> v{10, 20, 30};
  const std::vector<double> out =
      Permutation::cycle(3).apply(std::span<const double>(v));
  EXPECT_EQ(out, (std::vector<double>{20, 30, 10}));
}

TEST(RngTest, StreamsAreDeterministic) {
  Rng a(42, 7);
  Rng b(42, 7);
  Rng c(42, 8);
  bool differs = false;
  for (int i = 0; i < 10; ++i) {
    const auto va = a.bits();
    EXPECT_EQ(va, b.bits());
    differs |= va != c.bits();
  }
  EXPECT_TRUE(differs);
}

TEST(RngTest, Ranges) {
  Rng r(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_LT(r.below(7), 7u);
  }
}

}  // namespace
}  // namespace varbounds
