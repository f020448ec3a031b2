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

#include "alphaz/poly.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace alphaz {

void Polynomial::trim() {
  while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
  if (c_.empty()) c_.push_back(0.0);
}

std::complex<double> Polynomial::eval(std::complex<double> x) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial{};
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<double> out(ca.size() + cb.size() - 1, 0.0);
  for (std::size_t i = 0; i < ca.size(); ++i)
    for (std::size_t j = 0; j < cb.size(); ++j) out[i + j] += ca[i] * cb[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& p, double s) {
  std::vector<double> out = p.coeffs();
  for (double& c : out) c *= s;
  return Polynomial(std::move(out));
}

Polynomial operator*(double s, const Polynomial& p) { return p * s; }

Polynomial add_scaled(const Polynomial& a, const Polynomial& b, double scale) {
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<double> out(std::max(ca.size(), cb.size()), 0.0);
  for (std::size_t i = 0; i < ca.size(); ++i) out[i] = ca[i];
  for (std::size_t i = 0; i < cb.size(); ++i) out[i] += scale * cb[i];
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  return add_scaled(a, b, 1.0);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return add_scaled(a, b, -1.0);
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial acc{1.0};
  for (unsigned i = 0; i < k; ++i) acc = acc * p;
  return acc;
}

namespace {

// Parlett-Reinsch balancing: similarity-scales rows/columns by powers of the
// radix until their 1-norms agree, which leaves eigenvalues exact and can
// improve their computed accuracy dramatically for lopsided companions.
void balance(Eigen::MatrixXd& m) {
  const double radix = 2.0;
  const double radix2 = radix * radix;
  const Eigen::Index n = m.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      double r = 0.0, c = 0.0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(m(j, i));
        r += std::abs(m(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / radix;
      double f = 1.0;
      double s = c + r;
      while (c < g) {
        f *= radix;
        c *= radix2;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix2;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        g = 1.0 / f;
        m.row(i) *= g;
        m.col(i) *= f;
      }
    }
  }
}

}  // namespace

std::vector<std::complex<double>> roots(const Polynomial& p) {
  if (p.is_zero()) throw ZeroPolynomial("roots: zero polynomial");
  const int deg = p.degree();
  if (deg == 0) throw ConstantPolynomial("roots: constant polynomial");

  const auto& c = p.coeffs();
  std::vector<std::complex<double>> out;
  out.reserve(static_cast<std::size_t>(deg));

  if (deg == 1) {
    out.emplace_back(-c[0] / c[1], 0.0);
    return out;
  }

  // Companion matrix of the monic polynomial, subdiagonal ones, negated
  // coefficients in the last column.
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -c[static_cast<std::size_t>(i)] / c.back();

  balance(companion);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, /*computeEigenvectors=*/false);
  for (int i = 0; i < deg; ++i) out.push_back(solver.eigenvalues()(i));

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return out;
}

}  // namespace alphaz
