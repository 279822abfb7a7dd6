// Copyright 2026 The quasipart Authors
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

#ifndef QUASIPART_COUNTING_HPP_
#define QUASIPART_COUNTING_HPP_

#include <cstdint>
#include <vector>

#include "quasipart/numeric.hpp"
#include "quasipart/part_set.hpp"

namespace quasipart {

// p_A(n): the number of partitions of n with every part in A. p_A(0) = 1 and
// p_A(n) = 0 for n < 0. Sets with gcd g > 1 are reduced to A/g first.
Count count(const PartSet& set, std::int64_t n);

// [p_A(0), ..., p_A(n_max)] from a single sweep. Throws kNegativeBound.
std::vector<Count> count_table(const PartSet& set, std::int64_t n_max);

// Cached p_A over [0, bound]. Lookups outside the cache are still answered
// exactly (0 below zero, a fresh count() above the bound).
class CountTable {
 public:
  CountTable(PartSet set, std::int64_t bound);

  const PartSet& part_set() const noexcept { return set_; }
  std::int64_t bound() const noexcept {
    return static_cast<std::int64_t>(values_.size()) - 1;
  }
  Count operator()(std::int64_t n) const;

 private:
  PartSet set_;
  std::vector<Count> values_;
};

// A partition x_1 >= x_2 >= ... >= x_m.
struct Partition {
  std::vector<std::int64_t> parts;

  std::int64_t total() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

// Refuse to enumerate more than this many partitions.
inline constexpr long kOracleLimit = 1'000'000;

// Every partition of n into parts from A, each non-increasing, listed in
// lexicographically decreasing order. Throws kNegativeBound for n < 0 and
// kOracleBoundExceeded when p_A(n) > kOracleLimit.
std::vector<Partition> enumerate_partitions(const PartSet& set, std::int64_t n);

// The two terms of p_A(n) = p_A(n - a) + p_{A \ {a}}(n).
struct Lemma1Split {
  Count with_part;     // p_A(n - a): partitions that use a at least once
  Count without_part;  // p_{A \ {a}}(n), with p_{empty}(n) = [n == 0]
};

// Throws kPartNotInSet when a is not in A and kPartExceedsN when a > n.
Lemma1Split lemma1_split(const PartSet& set, std::int64_t a, std::int64_t n);

}  // namespace quasipart

#endif  // QUASIPART_COUNTING_HPP_
