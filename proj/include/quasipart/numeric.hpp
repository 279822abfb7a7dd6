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

#ifndef QUASIPART_NUMERIC_HPP_
#define QUASIPART_NUMERIC_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace quasipart {

// Arbitrary-precision integer. Partition counts never fit a machine word
// for long.
using BigInt = mpz_class;

// Exact fraction, always held in canonical (reduced, positive denominator)
// form.
using Rational = mpq_class;

// The value p_A(n).
using Count = BigInt;

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt pow(const BigInt& base, unsigned exponent);

Rational make_rational(const BigInt& numerator, const BigInt& denominator);

// "p/q", or "p" when q == 1.
std::string exact_string(const Rational& value);
std::string exact_string(const BigInt& value);

// Decimal approximation rounded half away from zero to `significant`
// significant digits, trailing zeros trimmed. Computed in integer
// arithmetic; never goes through a double.
std::string decimal_string(const Rational& value, int significant = 12);

// Rejects values outside [INT64_MIN, INT64_MAX].
std::int64_t to_int64(const BigInt& value);

}  // namespace quasipart

#endif  // QUASIPART_NUMERIC_HPP_
