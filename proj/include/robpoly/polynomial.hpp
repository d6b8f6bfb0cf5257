// Copyright 2026 The robpoly Authors.
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

#ifndef ROBPOLY_POLYNOMIAL_HPP
#define ROBPOLY_POLYNOMIAL_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace robpoly {

enum class Basis { kMonomial, kChebyshev };

// Univariate polynomial with an explicit basis tag. Coefficient k multiplies
// x^k (monomial) or T_k(x) (Chebyshev). Always at least one coefficient.
class UniPoly {
 public:
  UniPoly() : coeffs_{0.0} {}
  UniPoly(Basis basis, std::vector<double> coeffs);

  static UniPoly Monomial(std::vector<double> coeffs) {
    return UniPoly(Basis::kMonomial, std::move(coeffs));
  }
  static UniPoly Chebyshev(std::vector<double> coeffs) {
    return UniPoly(Basis::kChebyshev, std::move(coeffs));
  }

  Basis basis() const { return basis_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const double> coeffs() const { return coeffs_; }
  double coeff(int k) const {
    return k >= 0 && k <= degree() ? coeffs_[static_cast<std::size_t>(k)] : 0.0;
  }

  // Horner in the monomial basis, Clenshaw in the Chebyshev basis.
  double operator()(double x) const;

  // Same basis as the receiver; degree drops by one (never below zero).
  UniPoly Derivative() const;

  UniPoly ToMonomial() const;
  UniPoly ToChebyshev() const;

  // x -> p(a*x + b), returned in the monomial basis.
  UniPoly ComposeAffine(double a, double b) const;

 private:
  Basis basis_ = Basis::kMonomial;
  std::vector<double> coeffs_;
};

// Products and sums are formed in the monomial basis.
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator*(double s, const UniPoly& p);

/// T_d by the three-term recurrence, monomial basis.
UniPoly ChebyshevT(int d);

/// Legendre P_k via Bonnet's recurrence, monomial basis.
UniPoly LegendreP(int k);
UniPoly LegendrePDerivative(int k);

// n-variate polynomial of individual degree at most d, stored as a dense
// (d+1)^n tensor of coefficients in the product Chebyshev basis
// T_{a_1}(x_1)...T_{a_n}(x_n). Flat layout is row-major, last axis fastest.
// Immutable once built.
class MultiPoly {
 public:
  MultiPoly(int n, int d);
  MultiPoly(int n, int d, std::vector<double> coeffs);

  static MultiPoly Constant(int n, int d, double value);

  // Product of univariate factors f_1(x_1)...f_n(x_n); d is the largest
  // factor degree.
  static MultiPoly TensorProduct(std::span<const UniPoly> factors);

  int dim() const { return n_; }
  int degree() const { return d_; }
  std::size_t size() const { return coeffs_.size(); }
  std::span<const double> coeffs() const { return coeffs_; }

  std::size_t FlatIndex(std::span<const int> alpha) const;
  std::vector<int> MultiIndex(std::size_t flat) const;
  double coeff(std::span<const int> alpha) const {
    return coeffs_[FlatIndex(alpha)];
  }

  double operator()(std::span<const double> x) const;
  double operator()(std::initializer_list<double> x) const {
    return (*this)(std::span<const double>(x.begin(), x.size()));
  }

  // Values on the tensor grid axis_points[0] x ... x axis_points[n-1],
  // row-major with the last axis fastest.
  std::vector<double> EvaluateGrid(
      std::span<const std::vector<double>> axis_points) const;

  // Partial derivative along `axis`, kept at individual degree d.
  MultiPoly Derivative(int axis) const;
  std::vector<double> Gradient(std::span<const double> x) const;

  // Zero-padded copy at a higher individual degree.
  MultiPoly Padded(int d) const;

  bool IsZero() const;

 private:
  int n_;
  int d_;
  std::vector<double> coeffs_;
};

MultiPoly Add(const MultiPoly& p, const MultiPoly& q);
MultiPoly Sub(const MultiPoly& p, const MultiPoly& q);
MultiPoly Scale(const MultiPoly& p, double c);

inline MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
  return Add(p, q);
}
inline MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) {
  return Sub(p, q);
}
inline MultiPoly operator*(double c, const MultiPoly& p) { return Scale(p, c); }

/// Sum of |c_a| over the Chebyshev coefficients; an upper bound on the sup
/// norm over the cube since |T_k| <= 1 there.
double CoeffAbsSum(const MultiPoly& p);

// Chebyshev-extrema grid of at least max(4d+1, resolution) points per axis,
// then one golden-section pass per axis around the grid argmax. The result
// is attained at a point of the cube, so it never exceeds the true sup norm.
// resolution <= 0 picks a default by dimension.
double SupNorm(const MultiPoly& p, int resolution = 0);

struct SupNormResult {
  double value = 0.0;
  std::vector<double> argmax;
};
SupNormResult SupNormWithArgmax(const MultiPoly& p, int resolution = 0);

// Integral of |p| over the cube. The last axis is split at sign changes and
// integrated exactly; the others use `resolution` Gauss-Legendre panels of
// d+2 nodes. resolution <= 0 picks 32 (n <= 2), 8 (n == 3) or 4 (n >= 4).
double L1Norm(const MultiPoly& p, int resolution = 0);

// Monomial-basis tensor of the same shape. For testing and export only.
std::vector<double> ToMonomialCoeffs(const MultiPoly& p);

}  // namespace robpoly

#endif  // ROBPOLY_POLYNOMIAL_HPP
