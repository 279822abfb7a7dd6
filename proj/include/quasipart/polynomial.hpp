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

#ifndef QUASIPART_POLYNOMIAL_HPP_
#define QUASIPART_POLYNOMIAL_HPP_

#include <span>
#include <vector>

#include "quasipart/numeric.hpp"

namespace quasipart {

// Dense polynomial over the rationals; coefficients()[j] multiplies x^j.
// Trailing zero coefficients are stripped, so the zero polynomial has no
// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  Rational operator()(const Rational& x) const;

  // The unique polynomial of degree < values.size() with P(i) = values[i]
  // for i = 0, 1, ..., via Newton forward differences.
  static Polynomial interpolate(std::span<const Rational> values);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace quasipart

#endif  // QUASIPART_POLYNOMIAL_HPP_
