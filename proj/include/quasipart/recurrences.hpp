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

#ifndef QUASIPART_RECURRENCES_HPP_
#define QUASIPART_RECURRENCES_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quasipart/counting.hpp"
#include "quasipart/numeric.hpp"
#include "quasipart/part_set.hpp"

namespace quasipart {

// All mutually incongruent solutions of coefficient * x == r (mod modulus).
struct CongruenceResult {
  std::int64_t modulus = 1;
  bool solvable = false;
  std::int64_t solution_count = 0;
  std::vector<std::int64_t> solutions;  // ascending, in [0, modulus)
};

// Throws kInvalidArgument when modulus < 1.
CongruenceResult solve_congruence(std::int64_t coefficient, std::int64_t r,
                                  std::int64_t modulus);

// Parameters an identity was checked at. Unused fields stay empty.
struct Instance {
  std::vector<std::int64_t> parts;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> l;
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> part;  // the a of Lemma 1, or the removed part

  std::string describe() const;
};

namespace identity {
inline constexpr const char* kLemma1 = "lemma1";
inline constexpr const char* kTelescoped = "telescoped_difference";
inline constexpr const char* kFilterEquivalence = "telescoped_filter_equivalence";
inline constexpr const char* kK2ClosedForm = "k2_closed_form";
inline constexpr const char* kCongruenceUnique = "congruence_unique_solution";
inline constexpr const char* kSertozOzluk = "sertoz_ozluk";
}  // namespace identity

// holds == (lhs == rhs). A skipped report is a placeholder for a check whose
// preconditions cannot be met; it has lhs == rhs == 0 and a note saying why.
struct IdentityReport {
  std::string identity;
  Instance instance;
  BigInt lhs;
  BigInt rhs;
  bool holds = false;
  bool skipped = false;
  std::string note;
};

// One part set with cached count tables for A and every A \ {a}.
class IdentityVerifier {
 public:
  // Tables are filled up to `bound`; larger arguments fall back to count().
  IdentityVerifier(PartSet set, std::int64_t bound);

  const PartSet& part_set() const noexcept { return set_; }

  // Smallest n at which the Sertoz-Ozluk recurrence is guaranteed:
  // prod(a) - sum(a) + k - 1.
  BigInt sertoz_ozluk_start() const;

  // p_A(n) against p_A(n-a) + p_{A\{a}}(n).
  IdentityReport lemma1(std::int64_t a, std::int64_t n) const;

  // p_A(Tl+r) - p_A(T(l-1)+r) against the sum over 0 <= i < T/a with
  // s | (r - i a) of p_{A\{a}}(Tl + r - i a), s = gcd(A \ {a}).
  IdentityReport telescoped_difference(std::int64_t removed, std::int64_t l,
                                       std::int64_t r) const;

  // The divisibility-filtered sum above against the unfiltered one.
  IdentityReport telescoped_filter_equivalence(std::int64_t removed,
                                               std::int64_t l,
                                               std::int64_t r) const;

  // p_A(a1 a2 l + r) against l + p_A(r), for |A| = 2.
  IdentityReport k2_closed_form(std::int64_t l, std::int64_t r) const;

  // 1 against sum_{i=n-k+2}^{n} C_{n-i} [p_A(i) - p_A(i - T)] with
  // C_m = (-1)^m binom(k-2, m). Below the validity bound this throws
  // kBelowValidityBound unless `force` is set, in which case the report is
  // computed and marked in its note.
  IdentityReport sertoz_ozluk(std::int64_t n, bool force = false) const;

 private:
  struct Telescoped {
    BigInt lhs;
    BigInt filtered;
    BigInt unfiltered;
  };
  Telescoped telescope(std::int64_t removed, std::int64_t l, std::int64_t r) const;
  std::int64_t residue_checked(std::int64_t r) const;

  PartSet set_;
  std::int64_t period_;
  CountTable table_;
  std::map<std::int64_t, CountTable> without_;
};

// One-shot wrappers. All require gcd(A) = 1 (kGcdNotOne).
IdentityReport telescoped_difference_sides(const PartSet& set,
                                           std::int64_t removed, std::int64_t l,
                                           std::int64_t r);
IdentityReport k2_closed_form(const PartSet& set, std::int64_t l, std::int64_t r);
IdentityReport sertoz_ozluk_check(const PartSet& set, std::int64_t n,
                                  bool force = false);

struct SuiteOptions {
  // Start the Sertoz-Ozluk run here instead of just above the validity bound.
  // Reports below the bound are computed but carry a note.
  std::optional<std::int64_t> sertoz_from;
  // Consecutive n checked for the Sertoz-Ozluk recurrence.
  std::int64_t sertoz_count = 50;
};

// Runs every verifier over all residues r and 0 <= l <= l_max, plus
// seed-driven Lemma 1 instances. Output order is fixed by (A, l_max, seed).
std::vector<IdentityReport> run_identity_suite(const PartSet& set,
                                               std::int64_t l_max,
                                               std::uint64_t seed,
                                               const SuiteOptions& options = {});

}  // namespace quasipart

#endif  // QUASIPART_RECURRENCES_HPP_
