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

#include "quasipart/quasipoly.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

#include "quasipart/counting.hpp"
#include "quasipart/error.hpp"

namespace quasipart {
namespace {

void require_gcd_one(const PartSet& set) {
  if (set.gcd() != 1) {
    throw Error(ErrorKind::kGcdNotOne,
                "gcd" + set.to_string() + " = " + std::to_string(set.gcd()) +
                    "; reduce first: p_A(n) = p_{A/g}(n/g) when g | n, else 0");
  }
}

unsigned exponent(const PartSet& set) {
  return static_cast<unsigned>(set.size() - 1);
}

Polynomial fit_residue(const std::vector<Count>& table, std::int64_t period,
                       std::int64_t residue, std::size_t fit_points,
                       std::int64_t last_l) {
  std::vector<Rational> samples;
  samples.reserve(static_cast<std::size_t>(last_l) + 1);
  for (std::int64_t l = 0; l <= last_l; ++l) {
    samples.emplace_back(table[static_cast<std::size_t>(period * l + residue)]);
  }
  const std::size_t used = std::min(fit_points, samples.size());
  Polynomial fit = Polynomial::interpolate(
      std::span<const Rational>(samples.data(), used));
  for (std::size_t l = used; l < samples.size(); ++l) {
    const Rational predicted = fit(Rational(static_cast<long>(l)));
    if (predicted != samples[l]) {
      throw ResidualNonZeroError(
          residue, static_cast<std::int64_t>(l),
          "residue " + std::to_string(residue) + ", l = " + std::to_string(l) +
              ": fitted constituent gives " + exact_string(predicted) +
              " but p_A(" + std::to_string(period * static_cast<std::int64_t>(l) + residue) +
              ") = " + samples[l].get_str());
    }
  }
  return fit;
}

}  // namespace

QuasiPolynomial interpolate_constituents(const PartSet& set,
                                         const InterpolationOptions& options) {
  require_gcd_one(set);
  if (options.extra_samples < 0) {
    throw Error(ErrorKind::kInvalidArgument, "extra_samples must be >= 0");
  }
  const int degree = options.fit_degree.value_or(static_cast<int>(exponent(set)));
  if (degree < 0) {
    throw Error(ErrorKind::kInvalidArgument, "fit degree must be >= 0");
  }
  const std::int64_t period = set.period_at_most(kMaxPeriod);
  const std::int64_t last_l = degree + options.extra_samples;
  const std::vector<Count> table = count_table(set, period * (last_l + 1) - 1);

  QuasiPolynomial q{set, period, std::vector<Polynomial>(static_cast<std::size_t>(period)),
                    SampleRange{0, last_l}};
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(period));

  auto work = [&](std::int64_t begin, std::int64_t end) {
    for (std::int64_t r = begin; r < end; ++r) {
      try {
        q.constituents[static_cast<std::size_t>(r)] = fit_residue(
            table, period, r, static_cast<std::size_t>(degree) + 1, last_l);
      } catch (...) {
        failures[static_cast<std::size_t>(r)] = std::current_exception();
      }
    }
  };

  const std::int64_t workers =
      std::clamp<std::int64_t>(options.threads, 1, period);
  if (workers == 1) {
    work(0, period);
  } else {
    std::vector<std::jthread> pool;
    const std::int64_t chunk = (period + workers - 1) / workers;
    for (std::int64_t begin = 0; begin < period; begin += chunk) {
      pool.emplace_back(work, begin, std::min(period, begin + chunk));
    }
  }

  // Lowest failing residue wins, whatever the thread count.
  for (const auto& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return q;
}

Count eval_quasipoly(const QuasiPolynomial& q, std::int64_t n) {
  if (n < 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "quasi-polynomial evaluated at negative n = " + std::to_string(n));
  }
  const std::int64_t l = n / q.period;
  const std::int64_t r = n % q.period;
  const Rational value =
      q.constituents[static_cast<std::size_t>(r)](Rational(static_cast<long>(l)));
  if (value.get_den() != 1 || value < 0) {
    throw Error(ErrorKind::kNonIntegerValue,
                "constituent " + std::to_string(r) + " at l = " + std::to_string(l) +
                    " gives " + exact_string(value) + ", not a count");
  }
  return value.get_num();
}

Rational leading_coefficient_expected(const PartSet& set) {
  require_gcd_one(set);
  const unsigned k = static_cast<unsigned>(set.size());
  const BigInt fact = factorial(k - 1);
  if (k == 1) return make_rational(1, set.period() * fact);
  return make_rational(pow(set.period(), k - 2), fact);
}

Rational limit_constant(const PartSet& set) {
  require_gcd_one(set);
  return make_rational(1, set.period() * factorial(exponent(set)));
}

Rational asymptotic_ratio(const PartSet& set, std::int64_t n) {
  require_gcd_one(set);
  if (n < 1) {
    throw Error(ErrorKind::kInvalidArgument,
                "asymptotic ratio needs n >= 1, got " + std::to_string(n));
  }
  return make_rational(count(set, n) * set.period() * factorial(exponent(set)),
                       pow(BigInt(static_cast<long>(n)), exponent(set)));
}

std::vector<Rational> limit_check(const PartSet& set, std::int64_t residue,
                                  std::span<const std::int64_t> l_values) {
  require_gcd_one(set);
  const std::int64_t period = set.period_at_most(kMaxPeriod);
  if (residue < 0 || residue >= period) {
    throw Error(ErrorKind::kInvalidArgument,
                "residue " + std::to_string(residue) + " outside [0, " +
                    std::to_string(period) + ")");
  }
  std::int64_t highest = 0;
  for (std::int64_t l : l_values) {
    if (l < 0) {
      throw Error(ErrorKind::kInvalidArgument, "l must be nonnegative");
    }
    if (period * l + residue == 0 && exponent(set) > 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "limit check is undefined at n = 0");
    }
    highest = std::max(highest, l);
  }
  const CountTable table(set, period * highest + residue);
  std::vector<Rational> out;
  out.reserve(l_values.size());
  for (std::int64_t l : l_values) {
    const std::int64_t n = period * l + residue;
    out.push_back(make_rational(table(n),
                                pow(BigInt(static_cast<long>(n)), exponent(set))));
  }
  return out;
}

std::vector<ConstituentCheck> check_structure(const QuasiPolynomial& q) {
  const Rational expected = leading_coefficient_expected(q.part_set);
  const int expected_degree = static_cast<int>(exponent(q.part_set));
  std::vector<ConstituentCheck> out;
  out.reserve(q.constituents.size());
  for (std::size_t r = 0; r < q.constituents.size(); ++r) {
    const Polynomial& p = q.constituents[r];
    ConstituentCheck check;
    check.residue = static_cast<std::int64_t>(r);
    check.degree = p.degree();
    check.leading = p.leading();
    check.degree_matches = p.degree() == expected_degree;
    check.leading_matches = check.leading == expected;
    out.push_back(std::move(check));
  }
  return out;
}

}  // namespace quasipart
