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

#include "quasipart/counting.hpp"

#include <numeric>
#include <string>

#include "quasipart/error.hpp"

namespace quasipart {
namespace {

// Unbounded-use convolution: outer loop over parts, inner loop ascending,
// so each multiset of parts is counted exactly once.
std::vector<Count> sweep(const PartSet& set, std::int64_t n_max) {
  std::vector<Count> table(static_cast<std::size_t>(n_max) + 1);
  table[0] = 1;
  for (std::int64_t a : set.parts()) {
    for (std::int64_t i = a; i <= n_max; ++i) {
      table[static_cast<std::size_t>(i)] += table[static_cast<std::size_t>(i - a)];
    }
  }
  return table;
}

}  // namespace

Count count(const PartSet& set, std::int64_t n) {
  if (n < 0) return 0;
  const std::int64_t g = set.gcd();
  if (n % g != 0) return 0;
  if (g == 1) return sweep(set, n).back();
  return sweep(set.reduced(), n / g).back();
}

std::vector<Count> count_table(const PartSet& set, std::int64_t n_max) {
  if (n_max < 0) {
    throw Error(ErrorKind::kNegativeBound,
                "table bound " + std::to_string(n_max) + " is negative");
  }
  const std::int64_t g = set.gcd();
  if (g == 1) return sweep(set, n_max);

  const std::vector<Count> reduced = sweep(set.reduced(), n_max / g);
  std::vector<Count> table(static_cast<std::size_t>(n_max) + 1);
  for (std::size_t j = 0; j < reduced.size(); ++j) {
    table[j * static_cast<std::size_t>(g)] = reduced[j];
  }
  return table;
}

CountTable::CountTable(PartSet set, std::int64_t bound)
    : set_(std::move(set)), values_(count_table(set_, bound)) {}

Count CountTable::operator()(std::int64_t n) const {
  if (n < 0) return 0;
  if (n <= bound()) return values_[static_cast<std::size_t>(n)];
  return count(set_, n);
}

std::int64_t Partition::total() const {
  return std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
}

namespace {

void extend(const std::vector<std::int64_t>& parts, std::size_t max_index,
            std::int64_t remaining, std::vector<std::int64_t>& prefix,
            std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition{prefix});
    return;
  }
  // Parts are tried largest first and never exceed the previous one.
  for (std::size_t i = max_index + 1; i-- > 0;) {
    if (parts[i] > remaining) continue;
    prefix.push_back(parts[i]);
    extend(parts, i, remaining - parts[i], prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(const PartSet& set, std::int64_t n) {
  if (n < 0) {
    throw Error(ErrorKind::kNegativeBound,
                "cannot enumerate partitions of " + std::to_string(n));
  }
  const Count expected = count(set, n);
  if (expected > kOracleLimit) {
    throw Error(ErrorKind::kOracleBoundExceeded,
                set.to_string() + " has " + expected.get_str() +
                    " partitions of " + std::to_string(n) + ", above the " +
                    std::to_string(kOracleLimit) + " oracle limit");
  }
  std::vector<Partition> out;
  out.reserve(expected.get_ui());
  std::vector<std::int64_t> prefix;
  extend(set.parts(), set.size() - 1, n, prefix, out);
  return out;
}

Lemma1Split lemma1_split(const PartSet& set, std::int64_t a, std::int64_t n) {
  const std::optional<PartSet> rest = set.without(a);
  if (a > n) {
    throw Error(ErrorKind::kPartExceedsN,
                "part " + std::to_string(a) + " exceeds n = " + std::to_string(n));
  }
  Lemma1Split split;
  split.with_part = count(set, n - a);
  split.without_part = rest ? count(*rest, n) : Count(n == 0 ? 1 : 0);
  return split;
}

}  // namespace quasipart
