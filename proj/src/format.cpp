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

#include <cstdlib>
#include <string>

#include "quasipart/error.hpp"
#include "quasipart/numeric.hpp"

namespace quasipart {

BigInt factorial(unsigned n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

BigInt pow(const BigInt& base, unsigned exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

Rational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::kInvalidArgument, "zero denominator");
  }
  Rational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string exact_string(const Rational& value) { return value.get_str(); }

std::string exact_string(const BigInt& value) { return value.get_str(); }

std::string decimal_string(const Rational& value, int significant) {
  if (significant < 1) {
    throw Error(ErrorKind::kInvalidArgument, "significant digits must be >= 1");
  }
  if (value == 0) return "0";

  const bool negative = value < 0;
  const Rational magnitude = abs(value);

  // Find e with 10^e <= magnitude < 10^(e+1).
  long exponent = static_cast<long>(
                      mpz_sizeinbase(magnitude.get_num_mpz_t(), 10)) -
                  static_cast<long>(
                      mpz_sizeinbase(magnitude.get_den_mpz_t(), 10));
  auto ten_pow = [](long e) {
    Rational p = 1;
    const Rational base = e >= 0 ? Rational(10) : Rational(1, 10);
    for (long i = 0; i < std::labs(e); ++i) p *= base;
    return p;
  };
  while (ten_pow(exponent) > magnitude) --exponent;
  while (ten_pow(exponent + 1) <= magnitude) ++exponent;

  // digits = round(magnitude * 10^(significant - 1 - exponent))
  const Rational scaled = magnitude * ten_pow(significant - 1 - exponent);
  BigInt digits = scaled.get_num() / scaled.get_den();
  const Rational remainder = scaled - Rational(digits);
  if (remainder * 2 >= 1) ++digits;
  if (digits == pow(BigInt(10), static_cast<unsigned>(significant))) {
    digits /= 10;
    ++exponent;
  }

  std::string body = digits.get_str();
  std::string text;
  if (exponent >= significant - 1) {
    text = body + std::string(static_cast<std::size_t>(exponent - significant + 1), '0');
  } else if (exponent >= 0) {
    text = body.substr(0, static_cast<std::size_t>(exponent + 1)) + "." +
           body.substr(static_cast<std::size_t>(exponent + 1));
  } else {
    text = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + body;
  }
  if (text.find('.') != std::string::npos) {
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  return negative ? "-" + text : text;
}

std::int64_t to_int64(const BigInt& value) {
  if (!mpz_fits_slong_p(value.get_mpz_t()) || sizeof(long) < 8) {
    throw Error(ErrorKind::kInvalidArgument,
                "value " + value.get_str() + " does not fit in 64 bits");
  }
  return value.get_si();
}

}  // namespace quasipart
