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

#include "robpoly/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "robpoly/error.hpp"
#include "robpoly/quadrature.hpp"

namespace robpoly {
namespace {

std::size_t IntPow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Monomial coefficients of T_0..T_d, row k holds T_k.
std::vector<std::vector<double>> ChebyshevTable(int d) {
  std::vector<std::vector<double>> t(static_cast<std::size_t>(d) + 1);
  t[0] = {1.0};
  if (d >= 1) t[1] = {0.0, 1.0};
  for (int k = 2; k <= d; ++k) {
    std::vector<double> next(static_cast<std::size_t>(k) + 1, 0.0);
    const auto& a = t[static_cast<std::size_t>(k - 1)];
    const auto& b = t[static_cast<std::size_t>(k - 2)];
    for (std::size_t i = 0; i < a.size(); ++i) next[i + 1] += 2.0 * a[i];
    for (std::size_t i = 0; i < b.size(); ++i) next[i] -= b[i];
    t[static_cast<std::size_t>(k)] = std::move(next);
  }
  return t;
}

// T_0(x)..T_d(x) into out.
void ChebyshevValues(double x, int d, double* out) {
  out[0] = 1.0;
  if (d >= 1) out[1] = x;
  for (int k = 2; k <= d; ++k) out[k] = 2.0 * x * out[k - 1] - out[k - 2];
}

// Chebyshev extrema cos(pi k / (count-1)) in ascending order, with the
// endpoints, the midpoint and the mirror symmetry made exact.
std::vector<double> ChebyshevExtremaAscending(int count) {
  std::vector<double> pts(static_cast<std::size_t>(count));
  if (count == 1) {
    pts[0] = 0.0;
    return pts;
  }
  const int segs = count - 1;
  for (int k = 0; k <= segs / 2; ++k) {
    const double v = -std::cos(std::numbers::pi * k / segs);
    pts[static_cast<std::size_t>(k)] = v;
    pts[static_cast<std::size_t>(segs - k)] = -v;
  }
  pts.front() = -1.0;
  pts.back() = 1.0;
  if (segs % 2 == 0) pts[static_cast<std::size_t>(segs / 2)] = 0.0;
  return pts;
}

double GoldenMaxAbs(const MultiPoly& p, std::vector<double>& x, int axis,
                    double lo, double hi) {
  constexpr double kInvPhi = 0.6180339887498949;
  auto f = [&](double t) {
    const double saved = x[static_cast<std::size_t>(axis)];
    x[static_cast<std::size_t>(axis)] = t;
    const double v = std::abs(p(x));
    x[static_cast<std::size_t>(axis)] = saved;
    return v;
  };
  double a = lo;
  double b = hi;
  double c = b - kInvPhi * (b - a);
  double e = a + kInvPhi * (b - a);
  double fc = f(c);
  double fe = f(e);
  for (int it = 0; it < 60 && (b - a) > 1e-14; ++it) {
    if (fc > fe) {
      b = e;
      e = c;
      fe = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = e;
      fc = fe;
      e = a + kInvPhi * (b - a);
      fe = f(e);
    }
  }
  const double t = fc > fe ? c : e;
  const double best = std::max(fc, fe);
  if (best > f(x[static_cast<std::size_t>(axis)])) {
    x[static_cast<std::size_t>(axis)] = t;
  }
  return std::abs(p(x));
}

int DefaultSupResolution(int n) {
  if (n <= 2) return 128;
  if (n == 3) return 32;
  return 8;
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(Basis basis, std::vector<double> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.push_back(0.0);
  for (double c : coeffs_) {
    Require(std::isfinite(c), "UniPoly: non-finite coefficient");
  }
}

double UniPoly::operator()(double x) const {
  if (basis_ == Basis::kMonomial) {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + *it;
    }
    return acc;
  }
  double b1 = 0.0;
  double b2 = 0.0;
  for (int k = degree(); k >= 1; --k) {
    const double b0 = coeffs_[static_cast<std::size_t>(k)] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs_[0] + x * b1 - b2;
}

UniPoly UniPoly::Derivative() const {
  const int d = degree();
  if (d == 0) return UniPoly(basis_, {0.0});
  std::vector<double> out(static_cast<std::size_t>(d), 0.0);
  if (basis_ == Basis::kMonomial) {
    for (int k = 1; k <= d; ++k) {
      out[static_cast<std::size_t>(k - 1)] = k * coeffs_[static_cast<std::size_t>(k)];
    }
    return UniPoly(basis_, std::move(out));
  }
  // c'_{k-1} = c'_{k+1} + 2k c_k, with c'_0 halved at the end.
  std::vector<double> ext(static_cast<std::size_t>(d) + 2, 0.0);
  for (int k = d; k >= 1; --k) {
    ext[static_cast<std::size_t>(k - 1)] =
        ext[static_cast<std::size_t>(k + 1)] + 2.0 * k * coeffs_[static_cast<std::size_t>(k)];
  }
  ext[0] *= 0.5;
  std::copy_n(ext.begin(), d, out.begin());
  return UniPoly(basis_, std::move(out));
}

UniPoly UniPoly::ToMonomial() const {
  if (basis_ == Basis::kMonomial) return *this;
  const auto table = ChebyshevTable(degree());
  std::vector<double> out(coeffs_.size(), 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    for (std::size_t i = 0; i < table[k].size(); ++i) {
      out[i] += coeffs_[k] * table[k][i];
    }
  }
  return Monomial(std::move(out));
}

UniPoly UniPoly::ToChebyshev() const {
  if (basis_ == Basis::kChebyshev) return *this;
  const int d = degree();
  std::vector<double> out(coeffs_.size(), 0.0);
  // power holds x^k in the Chebyshev basis.
  std::vector<double> power(static_cast<std::size_t>(d) + 2, 0.0);
  power[0] = 1.0;
  for (int k = 0; k <= d; ++k) {
    for (int j = 0; j <= k; ++j) {
      out[static_cast<std::size_t>(j)] +=
          coeffs_[static_cast<std::size_t>(k)] * power[static_cast<std::size_t>(j)];
    }
    // x*T_0 = T_1, x*T_j = (T_{j+1} + T_{j-1}) / 2.
    std::vector<double> next(power.size(), 0.0);
    for (int j = 0; j <= k; ++j) {
      const double c = power[static_cast<std::size_t>(j)];
      if (c == 0.0) continue;
      if (j == 0) {
        next[1] += c;
      } else {
        next[static_cast<std::size_t>(j + 1)] += 0.5 * c;
        next[static_cast<std::size_t>(j - 1)] += 0.5 * c;
      }
    }
    power = std::move(next);
    power.push_back(0.0);
  }
  return Chebyshev(std::move(out));
}

UniPoly UniPoly::ComposeAffine(double a, double b) const {
  const UniPoly m = ToMonomial();
  const UniPoly lin = Monomial({b, a});
  UniPoly acc = Monomial({m.coeff(m.degree())});
  for (int k = m.degree() - 1; k >= 0; --k) {
    acc = acc * lin + Monomial({m.coeff(k)});
  }
  return acc;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  const UniPoly ma = a.ToMonomial();
  const UniPoly mb = b.ToMonomial();
  std::vector<double> out(static_cast<std::size_t>(ma.degree() + mb.degree()) + 1, 0.0);
  for (int i = 0; i <= ma.degree(); ++i) {
    for (int j = 0; j <= mb.degree(); ++j) {
      out[static_cast<std::size_t>(i + j)] += ma.coeff(i) * mb.coeff(j);
    }
  }
  return UniPoly::Monomial(std::move(out));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  const UniPoly ma = a.ToMonomial();
  const UniPoly mb = b.ToMonomial();
  const int d = std::max(ma.degree(), mb.degree());
  std::vector<double> out(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k) out[static_cast<std::size_t>(k)] = ma.coeff(k) + mb.coeff(k);
  return UniPoly::Monomial(std::move(out));
}

UniPoly operator*(double s, const UniPoly& p) {
  std::vector<double> out(p.coeffs().begin(), p.coeffs().end());
  for (double& c : out) c *= s;
  return UniPoly(p.basis(), std::move(out));
}

UniPoly ChebyshevT(int d) {
  Require(d >= 0, "ChebyshevT: negative degree");
  return UniPoly::Monomial(ChebyshevTable(d).back());
}

UniPoly LegendreP(int k) {
  Require(k >= 0, "LegendreP: negative degree");
  std::vector<double> prev{1.0};
  if (k == 0) return UniPoly::Monomial(prev);
  std::vector<double> cur{0.0, 1.0};
  for (int j = 1; j < k; ++j) {
    // (j+1) P_{j+1} = (2j+1) x P_j - j P_{j-1}
    std::vector<double> next(static_cast<std::size_t>(j) + 2, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += (2.0 * j + 1.0) * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= j * prev[i];
    for (double& c : next) c /= (j + 1.0);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return UniPoly::Monomial(std::move(cur));
}

UniPoly LegendrePDerivative(int k) { return LegendreP(k).Derivative(); }

// -------------------------------------------------------------- MultiPoly

MultiPoly::MultiPoly(int n, int d) : n_(n), d_(d) {
  Require(n >= 1, "MultiPoly: dimension must be positive");
  Require(d >= 0, "MultiPoly: degree must be non-negative");
  coeffs_.assign(IntPow(static_cast<std::size_t>(d) + 1, n), 0.0);
}

MultiPoly::MultiPoly(int n, int d, std::vector<double> coeffs)
    : MultiPoly(n, d) {
  Require(coeffs.size() == coeffs_.size(),
          "MultiPoly: expected " + std::to_string(coeffs_.size()) +
              " coefficients, got " + std::to_string(coeffs.size()),
          ErrorCode::kDimensionMismatch);
  for (double c : coeffs) {
    Require(std::isfinite(c), "MultiPoly: non-finite coefficient");
  }
  coeffs_ = std::move(coeffs);
}

MultiPoly MultiPoly::Constant(int n, int d, double value) {
  MultiPoly p(n, d);
  p.coeffs_[0] = value;
  return p;
}

MultiPoly MultiPoly::TensorProduct(std::span<const UniPoly> factors) {
  Require(!factors.empty(), "TensorProduct: no factors");
  int d = 0;
  std::vector<UniPoly> cheb;
  for (const UniPoly& f : factors) {
    cheb.push_back(f.ToChebyshev());
    d = std::max(d, f.degree());
  }
  const int n = static_cast<int>(factors.size());
  MultiPoly p(n, d);
  for (std::size_t flat = 0; flat < p.coeffs_.size(); ++flat) {
    const auto alpha = p.MultiIndex(flat);
    double c = 1.0;
    for (int i = 0; i < n && c != 0.0; ++i) {
      c *= cheb[static_cast<std::size_t>(i)].coeff(alpha[static_cast<std::size_t>(i)]);
    }
    p.coeffs_[flat] = c;
  }
  return p;
}

std::size_t MultiPoly::FlatIndex(std::span<const int> alpha) const {
  Require(static_cast<int>(alpha.size()) == n_, "FlatIndex: wrong arity",
          ErrorCode::kDimensionMismatch);
  std::size_t flat = 0;
  for (int a : alpha) {
    Require(a >= 0 && a <= d_, "FlatIndex: exponent out of range");
    flat = flat * (static_cast<std::size_t>(d_) + 1) + static_cast<std::size_t>(a);
  }
  return flat;
}

std::vector<int> MultiPoly::MultiIndex(std::size_t flat) const {
  std::vector<int> alpha(static_cast<std::size_t>(n_));
  const std::size_t base = static_cast<std::size_t>(d_) + 1;
  for (int i = n_ - 1; i >= 0; --i) {
    alpha[static_cast<std::size_t>(i)] = static_cast<int>(flat % base);
    flat /= base;
  }
  return alpha;
}

double MultiPoly::operator()(std::span<const double> x) const {
  Require(static_cast<int>(x.size()) == n_,
          "eval: point has " + std::to_string(x.size()) +
              " coordinates, polynomial has dimension " + std::to_string(n_),
          ErrorCode::kDimensionMismatch);
  const std::size_t base = static_cast<std::size_t>(d_) + 1;
  // Contract the last axis first; `work` shrinks by a factor base each step.
  std::vector<double> work(coeffs_);
  std::vector<double> t(base);
  std::size_t len = work.size();
  for (int axis = n_ - 1; axis >= 0; --axis) {
    ChebyshevValues(x[static_cast<std::size_t>(axis)], d_, t.data());
    const std::size_t blocks = len / base;
    for (std::size_t b = 0; b < blocks; ++b) {
      double acc = 0.0;
      const double* row = work.data() + b * base;
      for (std::size_t k = 0; k < base; ++k) acc += row[k] * t[k];
      work[b] = acc;
    }
    len = blocks;
  }
  return work[0];
}

std::vector<double> MultiPoly::EvaluateGrid(
    std::span<const std::vector<double>> axis_points) const {
  Require(static_cast<int>(axis_points.size()) == n_,
          "EvaluateGrid: need one point list per axis",
          ErrorCode::kDimensionMismatch);
  const std::size_t base = static_cast<std::size_t>(d_) + 1;
  std::vector<std::size_t> dims(static_cast<std::size_t>(n_), base);
  std::vector<double> cur(coeffs_);
  for (int axis = 0; axis < n_; ++axis) {
    const auto& pts = axis_points[static_cast<std::size_t>(axis)];
    const std::size_t r = pts.size();
    std::vector<double> vand(r * base);
    for (std::size_t i = 0; i < r; ++i) ChebyshevValues(pts[i], d_, vand.data() + i * base);
    std::size_t outer = 1;
    for (int k = 0; k < axis; ++k) outer *= dims[static_cast<std::size_t>(k)];
    std::size_t inner = 1;
    for (int k = axis + 1; k < n_; ++k) inner *= dims[static_cast<std::size_t>(k)];
    std::vector<double> next(outer * r * inner, 0.0);
    for (std::size_t o = 0; o < outer; ++o) {
      const double* src = cur.data() + o * base * inner;
      double* dst = next.data() + o * r * inner;
      for (std::size_t i = 0; i < r; ++i) {
        const double* v = vand.data() + i * base;
        double* out = dst + i * inner;
        for (std::size_t a = 0; a < base; ++a) {
          const double w = v[a];
          if (w == 0.0) continue;
          const double* in = src + a * inner;
          for (std::size_t q = 0; q < inner; ++q) out[q] += w * in[q];
        }
      }
    }
    cur = std::move(next);
    dims[static_cast<std::size_t>(axis)] = r;
  }
  return cur;
}

MultiPoly MultiPoly::Derivative(int axis) const {
  Require(axis >= 0 && axis < n_, "Derivative: axis out of range");
  MultiPoly out(n_, d_);
  if (d_ == 0) return out;
  const std::size_t base = static_cast<std::size_t>(d_) + 1;
  std::size_t inner = 1;
  for (int k = axis + 1; k < n_; ++k) inner *= base;
  const std::size_t outer = coeffs_.size() / (base * inner);
  std::vector<double> fiber(base);
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t q = 0; q < inner; ++q) {
      for (std::size_t a = 0; a < base; ++a) fiber[a] = coeffs_[(o * base + a) * inner + q];
      const UniPoly dp = UniPoly::Chebyshev(fiber).Derivative();
      for (std::size_t a = 0; a < base; ++a) {
        out.coeffs_[(o * base + a) * inner + q] = dp.coeff(static_cast<int>(a));
      }
    }
  }
  return out;
}

std::vector<double> MultiPoly::Gradient(std::span<const double> x) const {
  std::vector<double> g(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) g[static_cast<std::size_t>(i)] = Derivative(i)(x);
  return g;
}

MultiPoly MultiPoly::Padded(int d) const {
  Require(d >= d_, "Padded: cannot lower the degree");
  if (d == d_) return *this;
  MultiPoly out(n_, d);
  for (std::size_t flat = 0; flat < coeffs_.size(); ++flat) {
    out.coeffs_[out.FlatIndex(MultiIndex(flat))] = coeffs_[flat];
  }
  return out;
}

bool MultiPoly::IsZero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return c == 0.0; });
}

namespace {

template <typename Op>
MultiPoly Combine(const MultiPoly& p, const MultiPoly& q, Op op) {
  Require(p.dim() == q.dim(),
          "dimension mismatch: " + std::to_string(p.dim()) + " vs " +
              std::to_string(q.dim()),
          ErrorCode::kDimensionMismatch);
  const int d = std::max(p.degree(), q.degree());
  const MultiPoly a = p.Padded(d);
  const MultiPoly b = q.Padded(d);
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = op(a.coeffs()[i], b.coeffs()[i]);
  return MultiPoly(p.dim(), d, std::move(out));
}

}  // namespace

MultiPoly Add(const MultiPoly& p, const MultiPoly& q) {
  return Combine(p, q, [](double a, double b) { return a + b; });
}

MultiPoly Sub(const MultiPoly& p, const MultiPoly& q) {
  return Combine(p, q, [](double a, double b) { return a - b; });
}

MultiPoly Scale(const MultiPoly& p, double c) {
  std::vector<double> out(p.coeffs().begin(), p.coeffs().end());
  for (double& v : out) v *= c;
  return MultiPoly(p.dim(), p.degree(), std::move(out));
}

double CoeffAbsSum(const MultiPoly& p) {
  double s = 0.0;
  for (double c : p.coeffs()) s += std::abs(c);
  return s;
}

SupNormResult SupNormWithArgmax(const MultiPoly& p, int resolution) {
  const int n = p.dim();
  const int d = p.degree();
  if (resolution <= 0) resolution = DefaultSupResolution(n);
  const int wanted = std::max(4 * d + 1, resolution);
  // Segment counts 4*max(d,1)*2^j nest as the resolution grows and always
  // contain the extrema cos(pi k / d) of T_d.
  int segs = 4 * std::max(d, 1);
  while (segs + 1 < wanted) segs *= 2;
  const std::vector<double> axis = ChebyshevExtremaAscending(segs + 1);
  const std::vector<std::vector<double>> grid(static_cast<std::size_t>(n), axis);
  const std::vector<double> vals = p.EvaluateGrid(grid);

  std::size_t best = 0;
  for (std::size_t i = 1; i < vals.size(); ++i) {
    if (std::abs(vals[i]) > std::abs(vals[best])) best = i;
  }
  SupNormResult res;
  res.value = std::abs(vals[best]);
  std::vector<std::size_t> idx(static_cast<std::size_t>(n));
  {
    std::size_t flat = best;
    for (int i = n - 1; i >= 0; --i) {
      idx[static_cast<std::size_t>(i)] = flat % axis.size();
      flat /= axis.size();
    }
  }
  std::vector<double> x(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = axis[idx[static_cast<std::size_t>(i)]];
  res.argmax = x;
  if (d == 0) return res;

  for (int i = 0; i < n; ++i) {
    const std::size_t k = idx[static_cast<std::size_t>(i)];
    const double lo = axis[k == 0 ? 0 : k - 1];
    const double hi = axis[std::min(k + 1, axis.size() - 1)];
    GoldenMaxAbs(p, x, i, lo, hi);
  }
  const double refined = std::abs(p(x));
  if (refined > res.value) {
    res.value = refined;
    res.argmax = x;
  }
  return res;
}

double SupNorm(const MultiPoly& p, int resolution) {
  return SupNormWithArgmax(p, resolution).value;
}

namespace {

double Clenshaw(const std::vector<double>& c, double t) {
  double b1 = 0.0;
  double b2 = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) {
    const double b0 = 2.0 * t * b1 - b2 + c[k];
    b2 = b1;
    b1 = b0;
  }
  return t * b1 - b2 + c[0];
}

// Integral of |q| over [-1, 1] for q given by Chebyshev coefficients. The
// interval is split at sign changes so every piece is integrated exactly.
double AbsIntegral1D(const std::vector<double>& c, const QuadratureRule& unit) {
  const int d = static_cast<int>(c.size()) - 1;
  std::vector<double> cuts{-1.0};
  if (d >= 1) {
    const int probes = 16 * (d + 1);
    double prev_t = -1.0;
    double prev_v = Clenshaw(c, prev_t);
    for (int s = 1; s <= probes; ++s) {
      const double t = -std::cos(std::numbers::pi * s / probes);
      const double v = Clenshaw(c, t);
      if ((prev_v < 0.0 && v > 0.0) || (prev_v > 0.0 && v < 0.0)) {
        double lo = prev_t;
        double hi = t;
        double flo = prev_v;
        for (int it = 0; it < 100 && hi - lo > 1e-16; ++it) {
          const double mid = 0.5 * (lo + hi);
          const double fm = Clenshaw(c, mid);
          if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
          } else {
            hi = mid;
          }
        }
        cuts.push_back(0.5 * (lo + hi));
      }
      // A probe landing on a root keeps the last nonzero sign.
      if (v != 0.0) {
        prev_t = t;
        prev_v = v;
      }
    }
  }
  cuts.push_back(1.0);
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double a = cuts[k];
    const double h = 0.5 * (cuts[k + 1] - a);
    double piece = 0.0;
    for (std::size_t q = 0; q < unit.nodes.size(); ++q) {
      piece += unit.weights[q] * Clenshaw(c, a + h * (unit.nodes[q] + 1.0));
    }
    total += std::abs(piece * h);
  }
  return total;
}

}  // namespace

double L1Norm(const MultiPoly& p, int resolution) {
  const int n = p.dim();
  if (resolution <= 0) resolution = n <= 2 ? 32 : (n == 3 ? 8 : 4);
  Require(resolution >= 1, "L1Norm: resolution must be positive");
  const int d = p.degree();
  const std::size_t base = static_cast<std::size_t>(d) + 1;
  const QuadratureRule unit = GaussLegendre(d / 2 + 1);
  if (n == 1) return AbsIntegral1D(std::vector<double>(p.coeffs().begin(), p.coeffs().end()), unit);

  // Outer axes: composite Gauss-Legendre; the innermost axis is exact.
  const int k = d + 2;
  std::vector<double> nodes;
  std::vector<double> weights;
  const double h = 2.0 / resolution;
  for (int s = 0; s < resolution; ++s) {
    const double a = -1.0 + s * h;
    const QuadratureRule rule = GaussLegendre(k, a, a + h);
    nodes.insert(nodes.end(), rule.nodes.begin(), rule.nodes.end());
    weights.insert(weights.end(), rule.weights.begin(), rule.weights.end());
  }
  const std::size_t r = nodes.size();
  std::vector<std::vector<double>> tvals(r, std::vector<double>(base));
  for (std::size_t q = 0; q < r; ++q) {
    for (std::size_t a = 0; a < base; ++a) tvals[q][a] = std::cos(a * std::acos(nodes[q]));
  }
  const std::size_t outer_terms = p.size() / base;
  const int outer_dims = n - 1;
  std::vector<std::size_t> idx(static_cast<std::size_t>(outer_dims), 0);
  std::vector<double> c(base);
  double total = 0.0;
  for (bool more = true; more;) {
    double w = 1.0;
    for (int i = 0; i < outer_dims; ++i) w *= weights[idx[static_cast<std::size_t>(i)]];
    std::fill(c.begin(), c.end(), 0.0);
    for (std::size_t o = 0; o < outer_terms; ++o) {
      double t = 1.0;
      std::size_t rest = o;
      for (int i = outer_dims - 1; i >= 0; --i) {
        t *= tvals[idx[static_cast<std::size_t>(i)]][rest % base];
        rest /= base;
      }
      for (std::size_t a = 0; a < base; ++a) c[a] += t * p.coeffs()[o * base + a];
    }
    total += w * AbsIntegral1D(c, unit);
    more = false;
    for (int i = outer_dims - 1; i >= 0; --i) {
      if (++idx[static_cast<std::size_t>(i)] < r) {
        more = true;
        break;
      }
      idx[static_cast<std::size_t>(i)] = 0;
    }
  }
  return total;
}

std::vector<double> ToMonomialCoeffs(const MultiPoly& p) {
  const int n = p.dim();
  const int d = p.degree();
  const auto table = ChebyshevTable(d);
  const std::size_t base = static_cast<std::size_t>(d) + 1;
  // Apply the 1-D change of basis along each axis in turn.
  std::vector<double> cur(p.coeffs().begin(), p.coeffs().end());
  for (int axis = 0; axis < n; ++axis) {
    std::size_t inner = 1;
    for (int k = axis + 1; k < n; ++k) inner *= base;
    const std::size_t outer = cur.size() / (base * inner);
    std::vector<double> next(cur.size(), 0.0);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t a = 0; a < base; ++a) {
        for (std::size_t i = 0; i < table[a].size(); ++i) {
          const double t = table[a][i];
          if (t == 0.0) continue;
          for (std::size_t q = 0; q < inner; ++q) {
            next[(o * base + i) * inner + q] += t * cur[(o * base + a) * inner + q];
          }
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

}  // namespace robpoly
