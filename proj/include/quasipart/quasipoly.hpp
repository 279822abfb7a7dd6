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

#ifndef QUASIPART_QUASIPOLY_HPP_
#define QUASIPART_QUASIPOLY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "quasipart/numeric.hpp"
#include "quasipart/part_set.hpp"
#include "quasipart/polynomial.hpp"

namespace quasipart {

struct SampleRange {
  std::int64_t first = 0;
  std::int64_t last = 0;

  friend bool operator==(const SampleRange&, const SampleRange&) = default;
};

// p_A written as T constituents, p_A(T*l + r) = constituents[r](l), with
// T = a1*a2*...*ak. Each constituent was checked against the counting
// engine for every l in verified_range.
struct QuasiPolynomial {
  PartSet part_set;
  std::int64_t period = 1;
  std::vector<Polynomial> constituents;
  SampleRange verified_range;
};

struct InterpolationOptions {
  int extra_samples = 3;
  // Fit through fit_degree + 1 samples instead of k. Lower values are a
  // hypothesis test and are expected to raise ResidualNonZeroError.
  std::optional<int> fit_degree;
  // Residues are fitted on this many worker threads; output is identical for
  // any value.
  unsigned threads = 1;
};

// Samples p_A(T*l + r) for l = 0 .. k-1+extra_samples, fits each residue
// exactly through the first k samples and checks the rest lie on the fit.
// Throws kGcdNotOne, kInvalidArgument, or ResidualNonZeroError(r, l).
QuasiPolynomial interpolate_constituents(const PartSet& set,
                                         const InterpolationOptions& options = {});

// constituents[n mod T](n div T); must be a nonnegative integer, else
// kNonIntegerValue.
Count eval_quasipoly(const QuasiPolynomial& q, std::int64_t n);

// (a1*...*ak)^(k-2) / (k-1)!
Rational leading_coefficient_expected(const PartSet& set);

// 1 / ((a1*...*ak) (k-1)!), the limit of p_A(n) / n^(k-1).
Rational limit_constant(const PartSet& set);

// p_A(n) * (a1*...*ak) * (k-1)! / n^(k-1): the true count over the
// asymptotic estimate.
Rational asymptotic_ratio(const PartSet& set, std::int64_t n);

// p_A(T*l + r) / (T*l + r)^(k-1) for each l.
std::vector<Rational> limit_check(const PartSet& set, std::int64_t residue,
                                  std::span<const std::int64_t> l_values);

struct ConstituentCheck {
  std::int64_t residue = 0;
  int degree = -1;
  Rational leading;
  bool degree_matches = false;
  bool leading_matches = false;
};

// Degree k-1 and leading coefficient per residue.
std::vector<ConstituentCheck> check_structure(const QuasiPolynomial& q);

}  // namespace quasipart

#endif  // QUASIPART_QUASIPOLY_HPP_
