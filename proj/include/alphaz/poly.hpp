// Copyright 2026 The alphaz Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "alphaz/errors.hpp"

namespace alphaz {

/// Real-coefficient polynomial in one indeterminate, stored in ascending
/// order: coeffs()[k] multiplies x^k. Trailing zeros are trimmed on
/// construction (exact zero only); the zero polynomial is the single
/// coefficient 0. Immutable after construction.
class Polynomial {
 public:
  /// The zero polynomial.
  Polynomial() : c_{0.0} {}
  Polynomial(std::initializer_list<double> coeffs)
      : c_(coeffs) {
    trim();
  }
  explicit Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    trim();
  }

  /// degree() == 0 for constants, including the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0.0; }
  const std::vector<double>& coeffs() const { return c_; }
  /// Coefficient of x^k; 0 beyond the stored degree.
  double operator[](std::size_t k) const {
    return k < c_.size() ? c_[k] : 0.0;
  }
  double leading() const { return c_.back(); }

  /// Horner evaluation.
  std::complex<double> eval(std::complex<double> x) const;
  double eval(double x) const;

  bool operator==(const Polynomial& other) const = default;

 private:
  std::vector<double> c_;
  void trim();
};

/// Coefficient convolution.
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& p, double s);
Polynomial operator*(double s, const Polynomial& p);
Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);

/// a + scale * b, trailing zeros trimmed.
Polynomial add_scaled(const Polynomial& a, const Polynomial& b, double scale);

/// p^k by repeated multiplication; p^0 == 1.
Polynomial pow(const Polynomial& p, unsigned k);

/// All degree(p) roots (with multiplicity), as eigenvalues of the balanced
/// companion matrix, sorted by (real, imag). Throws ZeroPolynomial /
/// ConstantPolynomial when there is no companion matrix to build.
std::vector<std::complex<double>> roots(const Polynomial& p);

/// Ratio of two polynomials. The stored form is not reduced: no pole/zero
/// cancellation is ever attempted (ill-conditioned in floating point).
struct RationalFunction {
  Polynomial num;
  Polynomial den;

  RationalFunction(Polynomial n, Polynomial d)
      : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw InvalidArgument("rational function: zero denominator");
  }

  std::complex<double> eval(std::complex<double> x) const {
    return num.eval(x) / den.eval(x);
  }
};

}  // namespace alphaz
