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

#include "quasipart/polynomial.hpp"

namespace quasipart {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

Polynomial Polynomial::interpolate(std::span<const Rational> values) {
  const std::size_t m = values.size();

  // Forward difference table, collapsed in place: after step j,
  // diff[j] holds Delta^j y_0.
  std::vector<Rational> diff(values.begin(), values.end());
  for (std::size_t j = 1; j < m; ++j) {
    for (std::size_t i = m - 1; i >= j; --i) diff[i] -= diff[i - 1];
  }

  // P(x) = sum_j Delta^j y_0 / j! * x (x-1) ... (x-j+1)
  std::vector<Rational> result(m);
  std::vector<Rational> falling{Rational(1)};  // x^(j) in monomial form
  Rational inv_factorial = 1;
  for (std::size_t j = 0; j < m; ++j) {
    if (j > 0) {
      // falling *= (x - (j-1))
      const Rational shift = static_cast<long>(j - 1);
      std::vector<Rational> next(falling.size() + 1);
      for (std::size_t d = 0; d < falling.size(); ++d) {
        next[d + 1] += falling[d];
        next[d] -= shift * falling[d];
      }
      falling = std::move(next);
      inv_factorial /= static_cast<long>(j);
    }
    const Rational weight = diff[j] * inv_factorial;
    for (std::size_t d = 0; d < falling.size(); ++d) {
      result[d] += weight * falling[d];
    }
  }
  return Polynomial(std::move(result));
}

}  // namespace quasipart
