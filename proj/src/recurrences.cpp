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

#include "quasipart/recurrences.hpp"

#include <numeric>
#include <random>
#include <string>

#include "quasipart/error.hpp"

namespace quasipart {
namespace {

std::int64_t floor_mod(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

void require_gcd_one(const PartSet& set) {
  if (set.gcd() != 1) {
    throw Error(ErrorKind::kGcdNotOne,
                "gcd" + set.to_string() + " = " + std::to_string(set.gcd()) +
                    "; reduce first: p_A(n) = p_{A/g}(n/g) when g | n, else 0");
  }
}

IdentityReport make_report(const char* name, Instance instance, BigInt lhs,
                           BigInt rhs) {
  IdentityReport report;
  report.identity = name;
  report.instance = std::move(instance);
  report.holds = lhs == rhs;
  report.lhs = std::move(lhs);
  report.rhs = std::move(rhs);
  return report;
}

IdentityReport skip_report(const char* name, const PartSet& set,
                           std::string reason) {
  IdentityReport report = make_report(
      name, Instance{set.parts(), std::nullopt, std::nullopt, std::nullopt, std::nullopt},
      0, 0);
  report.skipped = true;
  report.note = std::move(reason);
  return report;
}

}  // namespace

CongruenceResult solve_congruence(std::int64_t coefficient, std::int64_t r,
                                  std::int64_t modulus) {
  if (modulus < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "modulus must be >= 1, got " + std::to_string(modulus));
  }
  const std::int64_t a = floor_mod(coefficient, modulus);
  const std::int64_t b = floor_mod(r, modulus);
  const std::int64_t g = std::gcd(a, modulus);  // gcd(0, m) = m

  CongruenceResult result;
  result.modulus = modulus;
  if (b % g != 0) return result;

  const std::int64_t reduced_modulus = modulus / g;
  BigInt inverse = 0;
  if (reduced_modulus > 1) {
    mpz_invert(inverse.get_mpz_t(), BigInt(static_cast<long>(a / g)).get_mpz_t(),
             BigInt(static_cast<long>(reduced_modulus)).get_mpz_t());
  }
  const BigInt product = inverse * static_cast<long>(b / g);
  const std::int64_t base =
      to_int64(BigInt(product % static_cast<long>(reduced_modulus)));
  result.solvable = true;
  result.solution_count = g;
  result.solutions.reserve(static_cast<std::size_t>(g));
  for (std::int64_t j = 0; j < g; ++j) {
    result.solutions.push_back(base + j * reduced_modulus);
  }
  return result;
}

std::string Instance::describe() const {
  std::string out = "A={";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts[i]);
  }
  out += '}';
  if (part) out += " a=" + std::to_string(*part);
  if (n) out += " n=" + std::to_string(*n);
  if (l) out += " l=" + std::to_string(*l);
  if (r) out += " r=" + std::to_string(*r);
  return out;
}

IdentityVerifier::IdentityVerifier(PartSet set, std::int64_t bound)
    : set_(std::move(set)),
      period_(set_.period_at_most(kMaxPeriod)),
      table_(set_, bound) {
  for (std::int64_t a : set_.parts()) {
    if (auto rest = set_.without(a)) without_.emplace(a, CountTable(*rest, bound));
  }
}

BigInt IdentityVerifier::sertoz_ozluk_start() const {
  return set_.period() - set_.sum() + static_cast<long>(set_.size()) - 1;
}

std::int64_t IdentityVerifier::residue_checked(std::int64_t r) const {
  if (r < 0 || r >= period_) {
    throw Error(ErrorKind::kInvalidArgument,
                "residue " + std::to_string(r) + " outside [0, " +
                    std::to_string(period_) + ")");
  }
  return r;
}

IdentityReport IdentityVerifier::lemma1(std::int64_t a, std::int64_t n) const {
  if (!set_.contains(a)) {
    throw Error(ErrorKind::kPartNotInSet,
                std::to_string(a) + " is not in " + set_.to_string());
  }
  if (a > n) {
    throw Error(ErrorKind::kPartExceedsN,
                "part " + std::to_string(a) + " exceeds n = " + std::to_string(n));
  }
  const auto rest = without_.find(a);
  const BigInt without_part =
      rest != without_.end() ? rest->second(n) : BigInt(n == 0 ? 1 : 0);
  Instance instance{set_.parts(), n, std::nullopt, std::nullopt, a};
  return make_report(identity::kLemma1, std::move(instance), table_(n),
                     table_(n - a) + without_part);
}

IdentityVerifier::Telescoped IdentityVerifier::telescope(std::int64_t removed,
                                                         std::int64_t l,
                                                         std::int64_t r) const {
  require_gcd_one(set_);
  if (!set_.contains(removed)) {
    throw Error(ErrorKind::kPartNotInSet,
                std::to_string(removed) + " is not in " + set_.to_string());
  }
  if (set_.size() < 2) {
    throw Error(ErrorKind::kWrongCardinality,
                "telescoped difference needs at least two parts");
  }
  if (l < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "telescoped difference needs l >= 1, got " + std::to_string(l));
  }
  residue_checked(r);

  const CountTable& rest = without_.at(removed);
  const std::int64_t s = rest.part_set().gcd();
  const std::int64_t top = period_ * l + r;

  Telescoped t;
  t.lhs = table_(top) - table_(top - period_);
  for (std::int64_t i = 0; i < period_ / removed; ++i) {
    BigInt term = rest(top - i * removed);
    if (floor_mod(r - i * removed, s) == 0) t.filtered += term;
    t.unfiltered += term;
  }
  return t;
}

IdentityReport IdentityVerifier::telescoped_difference(std::int64_t removed,
                                                       std::int64_t l,
                                                       std::int64_t r) const {
  Telescoped t = telescope(removed, l, r);
  return make_report(identity::kTelescoped,
                     Instance{set_.parts(), std::nullopt, l, r, removed},
                     std::move(t.lhs), std::move(t.filtered));
}

IdentityReport IdentityVerifier::telescoped_filter_equivalence(
    std::int64_t removed, std::int64_t l, std::int64_t r) const {
  Telescoped t = telescope(removed, l, r);
  return make_report(identity::kFilterEquivalence,
                     Instance{set_.parts(), std::nullopt, l, r, removed},
                     std::move(t.filtered), std::move(t.unfiltered));
}

IdentityReport IdentityVerifier::k2_closed_form(std::int64_t l,
                                                std::int64_t r) const {
  if (set_.size() != 2) {
    throw Error(ErrorKind::kWrongCardinality,
                "closed form needs exactly two parts, " + set_.to_string() +
                    " has " + std::to_string(set_.size()));
  }
  require_gcd_one(set_);
  if (l < 0) {
    throw Error(ErrorKind::kInvalidArgument, "l must be nonnegative");
  }
  residue_checked(r);
  return make_report(identity::kK2ClosedForm,
                     Instance{set_.parts(), std::nullopt, l, r, std::nullopt},
                     table_(period_ * l + r), table_(r) + static_cast<long>(l));
}

IdentityReport IdentityVerifier::sertoz_ozluk(std::int64_t n, bool force) const {
  require_gcd_one(set_);
  if (set_.size() < 2) {
    throw Error(ErrorKind::kWrongCardinality,
                "recurrence needs at least two parts (binom(k-2, m))");
  }
  const bool below = BigInt(static_cast<long>(n)) < sertoz_ozluk_start();
  if (below && !force) {
    throw Error(ErrorKind::kBelowValidityBound,
                "n = " + std::to_string(n) + " is not above " +
                    BigInt(sertoz_ozluk_start() - 1).get_str());
  }
  const auto k = static_cast<std::int64_t>(set_.size());
  BigInt sum = 0;
  for (std::int64_t i = n - k + 2; i <= n; ++i) {
    const auto m = static_cast<unsigned>(n - i);
    BigInt c = binomial(static_cast<unsigned>(k - 2), m);
    if (m % 2 == 1) c = -c;
    sum += c * (table_(i) - table_(i - period_));
  }
  IdentityReport report = make_report(
      identity::kSertozOzluk, Instance{set_.parts(), n, std::nullopt, std::nullopt, std::nullopt},
      1, std::move(sum));
  if (below) report.note = "below validity bound";
  return report;
}

namespace {

std::int64_t telescope_bound(const PartSet& set, std::int64_t l, std::int64_t r) {
  return set.period_at_most(kMaxPeriod) * l + r;
}

}  // namespace

IdentityReport telescoped_difference_sides(const PartSet& set,
                                           std::int64_t removed, std::int64_t l,
                                           std::int64_t r) {
  require_gcd_one(set);
  return IdentityVerifier(set, std::max<std::int64_t>(0, telescope_bound(set, l, r)))
      .telescoped_difference(removed, l, r);
}

IdentityReport k2_closed_form(const PartSet& set, std::int64_t l, std::int64_t r) {
  if (set.size() != 2) {
    throw Error(ErrorKind::kWrongCardinality,
                "closed form needs exactly two parts, " + set.to_string() +
                    " has " + std::to_string(set.size()));
  }
  require_gcd_one(set);
  return IdentityVerifier(set, std::max<std::int64_t>(0, telescope_bound(set, l, r)))
      .k2_closed_form(l, r);
}

IdentityReport sertoz_ozluk_check(const PartSet& set, std::int64_t n, bool force) {
  require_gcd_one(set);
  return IdentityVerifier(set, std::max<std::int64_t>(0, n)).sertoz_ozluk(n, force);
}

std::vector<IdentityReport> run_identity_suite(const PartSet& set,
                                               std::int64_t l_max,
                                               std::uint64_t seed,
                                               const SuiteOptions& options) {
  require_gcd_one(set);
  if (l_max < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "l_max must be >= 1, got " + std::to_string(l_max));
  }
  if (options.sertoz_count < 0) {
    throw Error(ErrorKind::kInvalidArgument, "sertoz_count must be >= 0");
  }
  const std::int64_t period = set.period_at_most(kMaxPeriod);
  const std::size_t k = set.size();

  std::int64_t sertoz_first = 0;
  if (k >= 2) {
    const BigInt start = options.sertoz_from
                             ? BigInt(static_cast<long>(*options.sertoz_from))
                             : IdentityVerifier(set, 0).sertoz_ozluk_start();
    sertoz_first = to_int64(start);
  }
  const std::int64_t bound = std::max(period * (l_max + 1) - 1,
                                      sertoz_first + options.sertoz_count);
  const IdentityVerifier verifier(set, bound);

  std::vector<IdentityReport> reports;
  auto guarded = [&](auto&& check, const Instance& context) {
    try {
      reports.push_back(check());
    } catch (const Error& e) {
      throw Error(e.kind(), std::string(e.what()) + " [at " + context.describe() + "]");
    }
  };

  // k = 2 closed form, l = 0 .. l_max.
  if (k == 2) {
    for (std::int64_t r = 0; r < period; ++r) {
      for (std::int64_t l = 0; l <= l_max; ++l) {
        guarded([&] { return verifier.k2_closed_form(l, r); },
                Instance{set.parts(), std::nullopt, l, r, std::nullopt});
      }
    }
  } else {
    reports.push_back(skip_report(identity::kK2ClosedForm, set,
                                  "closed form is stated for k = 2 only"));
  }

  // Telescoped differences for every removable part, l = 1 .. l_max.
  if (k >= 2) {
    for (std::int64_t removed : set.parts()) {
      for (std::int64_t r = 0; r < period; ++r) {
        for (std::int64_t l = 1; l <= l_max; ++l) {
          const Instance at{set.parts(), std::nullopt, l, r, removed};
          guarded([&] { return verifier.telescoped_difference(removed, l, r); }, at);
          guarded([&] { return verifier.telescoped_filter_equivalence(removed, l, r); },
                  at);
        }
      }
    }
  } else {
    reports.push_back(skip_report(identity::kTelescoped, set,
                                  "no part can be removed from a single-part set"));
  }

  // removed * x == r (mod gcd of the remaining parts) has exactly one solution.
  if (k >= 2) {
    for (std::int64_t removed : set.parts()) {
      const std::int64_t s = set.without(removed)->gcd();
      for (std::int64_t r = 0; r < s; ++r) {
        const CongruenceResult c = solve_congruence(removed, r, s);
        reports.push_back(make_report(
            identity::kCongruenceUnique,
            Instance{set.parts(), std::nullopt, std::nullopt, r, removed},
            c.solution_count, 1));
      }
    }
  } else {
    reports.push_back(skip_report(identity::kCongruenceUnique, set,
                                  "no part can be removed from a single-part set"));
  }

  // Lemma 1 at seeded random (a, n).
  std::mt19937_64 rng(seed);
  const std::int64_t lemma_instances = 8 * (l_max + 1) * static_cast<std::int64_t>(k);
  const auto span = static_cast<std::uint64_t>(period * (l_max + 1));
  for (std::int64_t t = 0; t < lemma_instances; ++t) {
    const std::int64_t a = set.parts()[rng() % k];
    const std::int64_t n = a + static_cast<std::int64_t>(rng() % span);
    guarded([&] { return verifier.lemma1(a, n); },
            Instance{set.parts(), n, std::nullopt, std::nullopt, a});
  }

  if (k >= 2) {
    for (std::int64_t n = sertoz_first; n < sertoz_first + options.sertoz_count; ++n) {
      guarded([&] { return verifier.sertoz_ozluk(n, true); },
              Instance{set.parts(), n, std::nullopt, std::nullopt, std::nullopt});
    }
  } else {
    reports.push_back(skip_report(identity::kSertozOzluk, set,
                                  "binom(k-2, m) is undefined for k = 1"));
  }
  return reports;
}

}  // namespace quasipart
