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

#include "robpoly/lp.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "robpoly/error.hpp"

namespace robpoly {

const char* ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
    case LpStatus::kIterationLimit: return "iteration_limit";
    case LpStatus::kNumericalFailure: return "numerical_failure";
  }
  return "unknown";
}

void LinearProgram::Validate() const {
  const std::size_t nv = objective.size();
  Require(lower.empty() || lower.size() == nv, "LP: lower bounds size mismatch",
          ErrorCode::kDimensionMismatch);
  Require(upper.empty() || upper.size() == nv, "LP: upper bounds size mismatch",
          ErrorCode::kDimensionMismatch);
  for (double c : objective) Require(std::isfinite(c), "LP: non-finite objective");
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const Constraint& row = constraints[i];
    Require(row.coeffs.size() == nv,
            "LP: constraint " + std::to_string(i) + " has " +
                std::to_string(row.coeffs.size()) + " coefficients, expected " +
                std::to_string(nv),
            ErrorCode::kDimensionMismatch);
    for (double a : row.coeffs) Require(std::isfinite(a), "LP: non-finite coefficient");
    Require(std::isfinite(row.rhs), "LP: non-finite right-hand side");
  }
  for (std::size_t j = 0; j < nv; ++j) {
    const double lo = lower.empty() ? 0.0 : lower[j];
    const double hi = upper.empty() ? kInf : upper[j];
    Require(!std::isnan(lo) && !std::isnan(hi) && lo != kInf && hi != -kInf,
            "LP: invalid bound on variable " + std::to_string(j));
  }
}

namespace {

enum class VarState { kBasic, kAtLower, kAtUpper };

// How an original variable maps onto internal non-negative columns.
struct VarMap {
  int col = -1;       // primary internal column
  int neg_col = -1;   // second column for free variables
  double offset = 0;  // x = offset + sign * x'
  double sign = 1;
};

// Internal problem: min c.x, A x = b, 0 <= x <= ub, A column-major dense.
class Simplex {
 public:
  Simplex(int rows, const LpOptions& opt) : m_(rows), opt_(opt) {}

  int AddColumn(const std::vector<double>& col, double cost, double ub) {
    cols_.insert(cols_.end(), col.begin(), col.end());
    cost_.push_back(cost);
    ub_.push_back(ub);
    return static_cast<int>(cost_.size()) - 1;
  }

  int num_cols() const { return static_cast<int>(cost_.size()); }
  const double* column(int j) const { return cols_.data() + static_cast<std::size_t>(j) * m_; }

  std::vector<double> b;
  std::vector<VarState> state;
  std::vector<int> basis;
  std::vector<double> xb;
  std::vector<double> cost_;
  std::vector<double> ub_;
  int iterations = 0;

  // Returns kOptimal, kUnbounded, kIterationLimit or kNumericalFailure.
  LpStatus Run(const std::vector<double>& cost, int max_iter) {
    const int ncols = num_cols();
    std::vector<double> y(static_cast<std::size_t>(m_));
    std::vector<double> alpha(static_cast<std::size_t>(m_));
    int degenerate_run = 0;
    int since_refactor = 0;
    int refactor_every = opt_.refactor_every;
    double piv_tol = 1e-9;
    int rollbacks = 0;
    std::vector<int> good_basis = basis;
    std::vector<VarState> good_state = state;
    while (true) {
      if (iterations >= max_iter) return LpStatus::kIterationLimit;
      if (since_refactor >= refactor_every) {
        if (Refactor()) {
          good_basis = basis;
          good_state = state;
        } else {
          // Drifted into a singular basis: return to the last good one and
          // pivot more conservatively.
          if (++rollbacks > 6) return LpStatus::kNumericalFailure;
          basis = good_basis;
          state = good_state;
          if (!Refactor()) return LpStatus::kNumericalFailure;
          piv_tol = std::min(1e-5, piv_tol * 10.0);
          refactor_every = std::max(5, refactor_every / 2);
        }
        since_refactor = 0;
      }
      ComputeDuals(cost, y);
      const bool bland = degenerate_run >= opt_.degenerate_switch;

      int q = -1;
      double best = 0.0;
      for (int j = 0; j < ncols; ++j) {
        const VarState s = state[static_cast<std::size_t>(j)];
        if (s == VarState::kBasic) continue;
        if (ub_[static_cast<std::size_t>(j)] <= 0.0) continue;  // fixed
        const double* a = column(j);
        double dj = cost[static_cast<std::size_t>(j)];
        for (int i = 0; i < m_; ++i) dj -= y[static_cast<std::size_t>(i)] * a[i];
        double gain = 0.0;
        if (s == VarState::kAtLower && dj < -opt_.optimality_tol) gain = -dj;
        if (s == VarState::kAtUpper && dj > opt_.optimality_tol) gain = dj;
        if (gain <= 0.0) continue;
        if (bland) {
          q = j;
          break;
        }
        if (gain > best) {
          best = gain;
          q = j;
        }
      }
      if (q < 0) return LpStatus::kOptimal;

      // alpha = Binv a_q
      const double* aq = column(q);
      for (int i = 0; i < m_; ++i) {
        double s = 0.0;
        const double* row = binv_.data() + static_cast<std::size_t>(i) * m_;
        for (int k = 0; k < m_; ++k) s += row[k] * aq[k];
        alpha[static_cast<std::size_t>(i)] = s;
      }
      const double dir = state[static_cast<std::size_t>(q)] == VarState::kAtLower ? 1.0 : -1.0;
      double amax = 1.0;
      for (double a : alpha) amax = std::max(amax, std::abs(a));
      const double kPivTol = piv_tol * amax;
      double theta = ub_[static_cast<std::size_t>(q)];
      int r = -1;
      bool to_upper = false;
      for (int i = 0; i < m_; ++i) {
        const double delta = -dir * alpha[static_cast<std::size_t>(i)];
        const int bi = basis[static_cast<std::size_t>(i)];
        double lim;
        bool up;
        if (delta < -kPivTol) {
          lim = std::max(0.0, xb[static_cast<std::size_t>(i)]) / -delta;
          up = false;
        } else if (delta > kPivTol && std::isfinite(ub_[static_cast<std::size_t>(bi)])) {
          lim = std::max(0.0, ub_[static_cast<std::size_t>(bi)] - xb[static_cast<std::size_t>(i)]) / delta;
          up = true;
        } else {
          continue;
        }
        bool take = false;
        if (r < 0) {
          take = lim <= theta;
        } else if (lim < theta - 1e-12) {
          take = true;
        } else if (lim <= theta + 1e-12) {
          // Tie: Bland picks the smallest column index, otherwise the
          // largest pivot magnitude.
          if (bland) {
            take = bi < basis[static_cast<std::size_t>(r)];
          } else {
            take = std::abs(alpha[static_cast<std::size_t>(i)]) >
                   std::abs(alpha[static_cast<std::size_t>(r)]);
          }
        }
        if (take) {
          theta = lim;
          r = i;
          to_upper = up;
        }
      }
      if (r < 0 && !std::isfinite(theta)) return LpStatus::kUnbounded;
      ++iterations;
      ++since_refactor;
      if (theta < 1e-12) {
        ++degenerate_run;
      } else {
        degenerate_run = 0;
      }

      for (int i = 0; i < m_; ++i) {
        xb[static_cast<std::size_t>(i)] -= dir * alpha[static_cast<std::size_t>(i)] * theta;
      }
      if (r < 0) {
        // Bound flip of the entering variable.
        state[static_cast<std::size_t>(q)] =
            dir > 0 ? VarState::kAtUpper : VarState::kAtLower;
        continue;
      }
      const int leaving = basis[static_cast<std::size_t>(r)];
      state[static_cast<std::size_t>(leaving)] = to_upper ? VarState::kAtUpper : VarState::kAtLower;
      const double entering_value =
          dir > 0 ? theta : ub_[static_cast<std::size_t>(q)] - theta;
      basis[static_cast<std::size_t>(r)] = q;
      state[static_cast<std::size_t>(q)] = VarState::kBasic;
      xb[static_cast<std::size_t>(r)] = entering_value;

      const double piv = alpha[static_cast<std::size_t>(r)];
      double* prow = binv_.data() + static_cast<std::size_t>(r) * m_;
      for (int k = 0; k < m_; ++k) prow[k] /= piv;
      for (int i = 0; i < m_; ++i) {
        if (i == r) continue;
        const double f = alpha[static_cast<std::size_t>(i)];
        if (f == 0.0) continue;
        double* row = binv_.data() + static_cast<std::size_t>(i) * m_;
        for (int k = 0; k < m_; ++k) row[k] -= f * prow[k];
      }
    }
  }

  bool Refactor() {
    Eigen::MatrixXd bmat(m_, m_);
    for (int i = 0; i < m_; ++i) {
      const double* a = column(basis[static_cast<std::size_t>(i)]);
      for (int k = 0; k < m_; ++k) bmat(k, i) = a[k];
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(bmat);
    if (!lu.isInvertible()) return false;
    const Eigen::MatrixXd inv = lu.inverse();
    binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      for (int k = 0; k < m_; ++k) binv_[static_cast<std::size_t>(i) * m_ + k] = inv(i, k);
    }
    RecomputeBasic();
    return true;
  }

  void RecomputeBasic() {
    std::vector<double> rhs(b);
    for (int j = 0; j < num_cols(); ++j) {
      if (state[static_cast<std::size_t>(j)] != VarState::kAtUpper) continue;
      const double u = ub_[static_cast<std::size_t>(j)];
      const double* a = column(j);
      for (int i = 0; i < m_; ++i) rhs[static_cast<std::size_t>(i)] -= a[i] * u;
    }
    xb.assign(static_cast<std::size_t>(m_), 0.0);
    for (int i = 0; i < m_; ++i) {
      double s = 0.0;
      for (int k = 0; k < m_; ++k) s += binv_[static_cast<std::size_t>(i) * m_ + k] * rhs[static_cast<std::size_t>(k)];
      xb[static_cast<std::size_t>(i)] = s;
    }
  }

  void InitIdentityBasis() {
    binv_.assign(static_cast<std::size_t>(m_) * m_, 0.0);
    for (int i = 0; i < m_; ++i) {
      const double piv = column(basis[static_cast<std::size_t>(i)])[i];
      binv_[static_cast<std::size_t>(i) * m_ + i] = 1.0 / piv;
    }
    RecomputeBasic();
  }

  void ComputeDuals(const std::vector<double>& cost, std::vector<double>& y) const {
    std::fill(y.begin(), y.end(), 0.0);
    for (int i = 0; i < m_; ++i) {
      const double cb = cost[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])];
      if (cb == 0.0) continue;
      const double* row = binv_.data() + static_cast<std::size_t>(i) * m_;
      for (int k = 0; k < m_; ++k) y[static_cast<std::size_t>(k)] += cb * row[k];
    }
  }

  double Value(int j) const {
    switch (state[static_cast<std::size_t>(j)]) {
      case VarState::kAtLower: return 0.0;
      case VarState::kAtUpper: return ub_[static_cast<std::size_t>(j)];
      case VarState::kBasic: break;
    }
    for (int i = 0; i < m_; ++i) {
      if (basis[static_cast<std::size_t>(i)] == j) return xb[static_cast<std::size_t>(i)];
    }
    return 0.0;
  }

  int m_;
  LpOptions opt_;
  std::vector<double> cols_;
  std::vector<double> binv_;
};

}  // namespace

LpSolution Solve(const LinearProgram& lp, const LpOptions& options) {
  lp.Validate();
  const int nv = lp.num_vars();
  const int m = static_cast<int>(lp.constraints.size());
  LpSolution sol;
  sol.x.assign(static_cast<std::size_t>(nv), 0.0);
  sol.duals.assign(static_cast<std::size_t>(m), 0.0);

  // Row factors: equilibration and sign so that b >= 0.
  std::vector<double> row_factor(static_cast<std::size_t>(m), 1.0);
  for (int i = 0; i < m; ++i) {
    double mx = 0.0;
    for (double a : lp.constraints[static_cast<std::size_t>(i)].coeffs) mx = std::max(mx, std::abs(a));
    if (mx > 0.0) row_factor[static_cast<std::size_t>(i)] = 1.0 / mx;
  }

  std::vector<VarMap> vmap(static_cast<std::size_t>(nv));
  std::vector<double> b(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) b[static_cast<std::size_t>(i)] = lp.constraints[static_cast<std::size_t>(i)].rhs;
  double const_obj = 0.0;
  auto orig_col = [&](int j) {
    std::vector<double> col(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) col[static_cast<std::size_t>(i)] = lp.constraints[static_cast<std::size_t>(i)].coeffs[static_cast<std::size_t>(j)];
    return col;
  };
  for (int j = 0; j < nv; ++j) {
    const double lo = lp.lower.empty() ? 0.0 : lp.lower[static_cast<std::size_t>(j)];
    const double hi = lp.upper.empty() ? kInf : lp.upper[static_cast<std::size_t>(j)];
    if (lo > hi) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    VarMap& vm = vmap[static_cast<std::size_t>(j)];
    const auto col = orig_col(j);
    if (std::isfinite(lo)) {
      vm.offset = lo;
      vm.sign = 1.0;
    } else if (std::isfinite(hi)) {
      vm.offset = hi;
      vm.sign = -1.0;
    } else {
      vm.offset = 0.0;
      vm.sign = 1.0;
    }
    for (int i = 0; i < m; ++i) b[static_cast<std::size_t>(i)] -= col[static_cast<std::size_t>(i)] * vm.offset;
    const_obj += lp.objective[static_cast<std::size_t>(j)] * vm.offset;
  }
  for (int i = 0; i < m; ++i) {
    b[static_cast<std::size_t>(i)] *= row_factor[static_cast<std::size_t>(i)];
    if (b[static_cast<std::size_t>(i)] < 0.0) {
      row_factor[static_cast<std::size_t>(i)] = -row_factor[static_cast<std::size_t>(i)];
      b[static_cast<std::size_t>(i)] = -b[static_cast<std::size_t>(i)];
    }
  }

  Simplex sx(m, options);
  std::vector<double> phase2_cost;
  for (int j = 0; j < nv; ++j) {
    VarMap& vm = vmap[static_cast<std::size_t>(j)];
    const double lo = lp.lower.empty() ? 0.0 : lp.lower[static_cast<std::size_t>(j)];
    const double hi = lp.upper.empty() ? kInf : lp.upper[static_cast<std::size_t>(j)];
    auto col = orig_col(j);
    for (int i = 0; i < m; ++i) col[static_cast<std::size_t>(i)] *= row_factor[static_cast<std::size_t>(i)] * vm.sign;
    const double c = lp.objective[static_cast<std::size_t>(j)] * vm.sign;
    const double range = std::isfinite(lo) ? hi - lo : (std::isfinite(hi) ? kInf : kInf);
    vm.col = sx.AddColumn(col, c, range);
    phase2_cost.push_back(c);
    if (!std::isfinite(lo) && !std::isfinite(hi)) {
      for (double& v : col) v = -v;
      vm.neg_col = sx.AddColumn(col, -c, kInf);
      phase2_cost.push_back(-c);
    }
  }
  // Slacks; a slack with a positive entry can start in the basis.
  std::vector<int> start(static_cast<std::size_t>(m), -1);
  for (int i = 0; i < m; ++i) {
    const Relation rel = lp.constraints[static_cast<std::size_t>(i)].relation;
    if (rel == Relation::kEqual) continue;
    std::vector<double> col(static_cast<std::size_t>(m), 0.0);
    const double s = (rel == Relation::kLessEqual ? 1.0 : -1.0) * row_factor[static_cast<std::size_t>(i)];
    col[static_cast<std::size_t>(i)] = s;
    const int k = sx.AddColumn(col, 0.0, kInf);
    phase2_cost.push_back(0.0);
    if (s > 0.0) start[static_cast<std::size_t>(i)] = k;
  }
  std::vector<int> artificials;
  for (int i = 0; i < m; ++i) {
    if (start[static_cast<std::size_t>(i)] >= 0) continue;
    std::vector<double> col(static_cast<std::size_t>(m), 0.0);
    col[static_cast<std::size_t>(i)] = 1.0;
    const int k = sx.AddColumn(col, 0.0, kInf);
    phase2_cost.push_back(0.0);
    artificials.push_back(k);
    start[static_cast<std::size_t>(i)] = k;
  }

  sx.b = b;
  sx.state.assign(static_cast<std::size_t>(sx.num_cols()), VarState::kAtLower);
  sx.basis = start;
  for (int k : start) sx.state[static_cast<std::size_t>(k)] = VarState::kBasic;
  sx.InitIdentityBasis();

  const int max_iter = options.max_iterations > 0
                           ? options.max_iterations
                           : std::max(20000, 50 * (m + sx.num_cols()));
  if (!artificials.empty()) {
    std::vector<double> phase1_cost(static_cast<std::size_t>(sx.num_cols()), 0.0);
    for (int k : artificials) phase1_cost[static_cast<std::size_t>(k)] = 1.0;
    const LpStatus st = sx.Run(phase1_cost, max_iter);
    if (st != LpStatus::kOptimal) {
      sol.status = st == LpStatus::kUnbounded ? LpStatus::kNumericalFailure : st;
      sol.iterations = sx.iterations;
      return sol;
    }
    double infeas = 0.0;
    for (int k : artificials) infeas += sx.Value(k);
    double bscale = 1.0;
    for (double v : b) bscale = std::max(bscale, std::abs(v));
    if (infeas > options.feasibility_tol * bscale * 10.0) {
      sol.status = LpStatus::kInfeasible;
      sol.iterations = sx.iterations;
      return sol;
    }
    for (int k : artificials) sx.ub_[static_cast<std::size_t>(k)] = 0.0;
  }
  LpStatus st = sx.Run(phase2_cost, max_iter);
  if (st == LpStatus::kOptimal && sx.Refactor()) {
    // Re-check optimality against a fresh factorisation.
    st = sx.Run(phase2_cost, max_iter);
  }
  sol.iterations = sx.iterations;
  sol.status = st;
  if (st != LpStatus::kOptimal) return sol;

  for (int j = 0; j < nv; ++j) {
    const VarMap& vm = vmap[static_cast<std::size_t>(j)];
    double v = sx.Value(vm.col);
    if (vm.neg_col >= 0) v -= sx.Value(vm.neg_col);
    sol.x[static_cast<std::size_t>(j)] = vm.offset + vm.sign * v;
  }
  std::vector<double> y(static_cast<std::size_t>(m));
  sx.ComputeDuals(phase2_cost, y);
  for (int i = 0; i < m; ++i) sol.duals[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)] * row_factor[static_cast<std::size_t>(i)];
  double obj = 0.0;
  for (int j = 0; j < nv; ++j) obj += lp.objective[static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)];
  sol.objective = obj;
  (void)const_obj;

  // Primal feasibility in row-scaled units.
  double viol = 0.0;
  for (int i = 0; i < m; ++i) {
    const Constraint& row = lp.constraints[static_cast<std::size_t>(i)];
    double ax = 0.0;
    double scale = 1.0;
    for (int j = 0; j < nv; ++j) {
      ax += row.coeffs[static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)];
      scale = std::max(scale, std::abs(row.coeffs[static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)]));
    }
    double v = 0.0;
    if (row.relation == Relation::kLessEqual) v = std::max(0.0, ax - row.rhs);
    if (row.relation == Relation::kGreaterEqual) v = std::max(0.0, row.rhs - ax);
    if (row.relation == Relation::kEqual) v = std::abs(ax - row.rhs);
    viol = std::max(viol, v / std::max(scale, std::abs(row.rhs)));
  }
  sol.max_violation = viol;
  if (viol > 1e-7) sol.status = LpStatus::kNumericalFailure;
  return sol;
}

std::vector<double> DesignRow(std::span<const double> x, int n, int d) {
  const std::size_t base = static_cast<std::size_t>(d) + 1;
  std::vector<double> t(static_cast<std::size_t>(n) * base);
  for (int i = 0; i < n; ++i) {
    double* ti = t.data() + static_cast<std::size_t>(i) * base;
    ti[0] = 1.0;
    if (d >= 1) ti[1] = x[static_cast<std::size_t>(i)];
    for (int k = 2; k <= d; ++k) ti[k] = 2.0 * x[static_cast<std::size_t>(i)] * ti[k - 1] - ti[k - 2];
  }
  std::vector<double> row{1.0};
  for (int i = 0; i < n; ++i) {
    std::vector<double> next(row.size() * base);
    const double* ti = t.data() + static_cast<std::size_t>(i) * base;
    for (std::size_t r = 0; r < row.size(); ++r) {
      for (std::size_t a = 0; a < base; ++a) next[r * base + a] = row[r] * ti[a];
    }
    row = std::move(next);
  }
  return row;
}

namespace {

void RequireInCube(std::span<const double> points, const char* who) {
  for (double v : points) {
    Require(std::isfinite(v) && v >= -1.0 && v <= 1.0,
            std::string(who) + ": point coordinate outside [-1, 1]");
  }
}

}  // namespace

FitResult LinfFit(std::span<const double> points, int n,
                  std::span<const double> labels, int d) {
  Require(n >= 1 && d >= 0, "LinfFit: invalid dimension or degree");
  const std::size_t k = labels.size();
  Require(k >= 1, "LinfFit: need at least one point");
  Require(points.size() == k * static_cast<std::size_t>(n), "LinfFit: points/labels mismatch",
          ErrorCode::kDimensionMismatch);
  RequireInCube(points, "LinfFit");
  const MultiPoly shape(n, d);
  const std::size_t p = shape.size();

  // Dual: min sum_j y_j (u_j - v_j) s.t. sum_j phi_j (u_j - v_j) = 0,
  // sum_j (u_j + v_j) = 1, u, v >= 0. Primal coefficients are the duals of
  // the first block; -dual of the last row is the minimax value.
  LinearProgram lp;
  lp.objective.resize(2 * k);
  lp.constraints.resize(p + 1);
  for (auto& row : lp.constraints) {
    row.coeffs.assign(2 * k, 0.0);
    row.relation = Relation::kEqual;
    row.rhs = 0.0;
  }
  lp.constraints[p].rhs = 1.0;
  for (std::size_t j = 0; j < k; ++j) {
    const auto phi = DesignRow(points.subspan(j * static_cast<std::size_t>(n), static_cast<std::size_t>(n)), n, d);
    for (std::size_t a = 0; a < p; ++a) {
      lp.constraints[a].coeffs[2 * j] = phi[a];
      lp.constraints[a].coeffs[2 * j + 1] = -phi[a];
    }
    lp.constraints[p].coeffs[2 * j] = 1.0;
    lp.constraints[p].coeffs[2 * j + 1] = 1.0;
    Require(std::isfinite(labels[j]), "LinfFit: non-finite label");
    lp.objective[2 * j] = labels[j];
    lp.objective[2 * j + 1] = -labels[j];
  }
  const LpSolution sol = Solve(lp);
  if (sol.status != LpStatus::kOptimal) {
    Fail(ErrorCode::kNumerical, std::string("LinfFit: LP ended with status ") + ToString(sol.status));
  }
  std::vector<double> coeffs(sol.duals.begin(), sol.duals.begin() + static_cast<std::ptrdiff_t>(p));
  FitResult fit{MultiPoly(n, d, std::move(coeffs)), 0.0, sol.iterations};
  double worst = 0.0;
  for (std::size_t j = 0; j < k; ++j) {
    const auto x = points.subspan(j * static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    worst = std::max(worst, std::abs(fit.poly(x) - labels[j]));
  }
  fit.objective = worst;
  return fit;
}

FitResult WeightedL1Fit(std::span<const WeightedCell> cells, int n, int d) {
  Require(n >= 1 && d >= 0, "WeightedL1Fit: invalid dimension or degree");
  Require(!cells.empty(), "WeightedL1Fit: no cells");
  const MultiPoly shape(n, d);
  const std::size_t p = shape.size();
  std::size_t total = 0;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    const WeightedCell& cell = cells[c];
    Require(!cell.labels.empty(), "WeightedL1Fit: cell " + std::to_string(c) + " is empty");
    Require(cell.points.size() == cell.labels.size() * static_cast<std::size_t>(n),
            "WeightedL1Fit: points/labels mismatch", ErrorCode::kDimensionMismatch);
    Require(cell.weight > 0.0 && std::isfinite(cell.weight), "WeightedL1Fit: weight must be positive");
    RequireInCube(cell.points, "WeightedL1Fit");
    total += cell.labels.size();
  }

  // Dual: min -sum y_b l_b s.t. sum phi_b l_b = 0, |l_b| <= w_b.
  // Primal coefficients are minus the duals.
  LinearProgram lp;
  lp.objective.reserve(total);
  lp.lower.reserve(total);
  lp.upper.reserve(total);
  lp.constraints.resize(p);
  for (auto& row : lp.constraints) {
    row.coeffs.reserve(total);
    row.relation = Relation::kEqual;
    row.rhs = 0.0;
  }
  for (const WeightedCell& cell : cells) {
    for (std::size_t s = 0; s < cell.labels.size(); ++s) {
      const std::span<const double> x(cell.points.data() + s * static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      const auto phi = DesignRow(x, n, d);
      for (std::size_t a = 0; a < p; ++a) lp.constraints[a].coeffs.push_back(phi[a]);
      Require(std::isfinite(cell.labels[s]), "WeightedL1Fit: non-finite label");
      lp.objective.push_back(-cell.labels[s]);
      lp.lower.push_back(-cell.weight);
      lp.upper.push_back(cell.weight);
    }
  }
  const LpSolution sol = Solve(lp);
  if (sol.status != LpStatus::kOptimal) {
    Fail(ErrorCode::kNumerical, std::string("WeightedL1Fit: LP ended with status ") + ToString(sol.status));
  }
  std::vector<double> coeffs(p);
  for (std::size_t a = 0; a < p; ++a) coeffs[a] = -sol.duals[a];
  FitResult fit{MultiPoly(n, d, std::move(coeffs)), 0.0, sol.iterations};
  double obj = 0.0;
  for (const WeightedCell& cell : cells) {
    for (std::size_t s = 0; s < cell.labels.size(); ++s) {
      const std::span<const double> x(cell.points.data() + s * static_cast<std::size_t>(n), static_cast<std::size_t>(n));
      obj += cell.weight * std::abs(fit.poly(x) - cell.labels[s]);
    }
  }
  fit.objective = obj;
  return fit;
}

}  // namespace robpoly
