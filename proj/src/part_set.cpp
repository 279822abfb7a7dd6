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

#include "quasipart/part_set.hpp"

#include <algorithm>
#include <numeric>

#include "quasipart/error.hpp"

namespace quasipart {

PartSet PartSet::make(std::span<const std::int64_t> raw) {
  if (raw.empty()) {
    throw Error(ErrorKind::kEmptySet, "part set must be nonempty");
  }
  std::vector<std::int64_t> parts(raw.begin(), raw.end());
  for (std::int64_t a : parts) {
    if (a < 1) {
      throw Error(ErrorKind::kNonPositivePart,
                  "part " + std::to_string(a) + " is not a positive integer");
    }
  }
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  return PartSet(std::move(parts));
}

PartSet::PartSet(std::vector<std::int64_t> sorted_parts)
    : parts_(std::move(sorted_parts)), period_(1) {
  for (std::int64_t a : parts_) {
    gcd_ = std::gcd(gcd_, a);
    if (__builtin_add_overflow(sum_, a, &sum_)) {
      throw Error(ErrorKind::kInvalidArgument, "sum of parts overflows");
    }
    period_ *= static_cast<long>(a);
  }
}

bool PartSet::contains(std::int64_t a) const {
  return std::binary_search(parts_.begin(), parts_.end(), a);
}

bool PartSet::pairwise_coprime() const {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    for (std::size_t j = i + 1; j < parts_.size(); ++j) {
      if (std::gcd(parts_[i], parts_[j]) != 1) return false;
    }
  }
  return true;
}

std::optional<PartSet> PartSet::without(std::int64_t a) const {
  if (!contains(a)) {
    throw Error(ErrorKind::kPartNotInSet,
                std::to_string(a) + " is not in " + to_string());
  }
  std::vector<std::int64_t> rest;
  rest.reserve(parts_.size() - 1);
  for (std::int64_t x : parts_) {
    if (x != a) rest.push_back(x);
  }
  if (rest.empty()) return std::nullopt;
  return PartSet(std::move(rest));
}

PartSet PartSet::reduced() const {
  std::vector<std::int64_t> rest(parts_);
  for (auto& x : rest) x /= gcd_;
  return PartSet(std::move(rest));
}

std::int64_t PartSet::period_at_most(std::int64_t limit) const {
  if (period_ > limit) {
    throw Error(ErrorKind::kInvalidArgument,
                "period " + period_.get_str() + " of " + to_string() +
                    " exceeds the supported limit " + std::to_string(limit));
  }
  return to_int64(period_);
}

std::string PartSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + "}";
}

}  // namespace quasipart
