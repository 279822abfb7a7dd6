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

#ifndef QUASIPART_PART_SET_HPP_
#define QUASIPART_PART_SET_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quasipart/numeric.hpp"

namespace quasipart {

// Largest period a1*a2*...*ak the residue-by-residue operations will walk.
inline constexpr std::int64_t kMaxPeriod = 10'000'000;

// A finite set A = {a_1 < a_2 < ... < a_k} of allowed parts, with its gcd and
// the product a_1 a_2 ... a_k (the quasi period of p_A).
class PartSet {
 public:
  // Deduplicates and sorts. Throws kEmptySet / kNonPositivePart.
  static PartSet make(std::span<const std::int64_t> raw);
  static PartSet make(std::initializer_list<std::int64_t> raw) {
    return make(std::span<const std::int64_t>(raw.begin(), raw.size()));
  }

  const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
  std::size_t size() const noexcept { return parts_.size(); }
  std::int64_t gcd() const noexcept { return gcd_; }
  const BigInt& period() const noexcept { return period_; }
  std::int64_t sum() const noexcept { return sum_; }
  std::int64_t largest() const noexcept { return parts_.back(); }

  bool contains(std::int64_t a) const;
  bool pairwise_coprime() const;

  // A \ {a}; nullopt when that leaves the empty set. Throws kPartNotInSet.
  std::optional<PartSet> without(std::int64_t a) const;

  // A / gcd(A).
  PartSet reduced() const;

  // The period as a machine integer, refusing anything above `limit`.
  std::int64_t period_at_most(std::int64_t limit) const;

  // "{2,3,5}"
  std::string to_string() const;

  friend bool operator==(const PartSet& a, const PartSet& b) {
    return a.parts_ == b.parts_;
  }

 private:
  explicit PartSet(std::vector<std::int64_t> sorted_parts);

  std::vector<std::int64_t> parts_;
  std::int64_t gcd_ = 0;
  std::int64_t sum_ = 0;
  BigInt period_;
};

inline PartSet make_part_set(std::span<const std::int64_t> raw) {
  return PartSet::make(raw);
}

}  // namespace quasipart

#endif  // QUASIPART_PART_SET_HPP_
