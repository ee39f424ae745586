#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "normlab/errors.hpp"

namespace normlab {

enum class Relation { LessEq, Equal, GreaterEq };

struct LpConstraint {
  std::vector<double> coeffs;
  Relation relation = Relation::LessEq;
  double rhs = 0.0;
};

// Dense desk-scale linear program: maximize objective . x subject to the
// rows and optional per-variable bounds. Variables without bounds are free.
struct LinearProgram {
  int num_vars = 0;
  std::vector<double> objective;
  std::vector<LpConstraint> constraints;
  std::vector<std::optional<double>> lower;
  std::vector<std::optional<double>> upper;

  explicit LinearProgram(int n)
      : num_vars(n), objective(static_cast<std::size_t>(n), 0.0),
        lower(static_cast<std::size_t>(n)), upper(static_cast<std::size_t>(n)) {}

  void add_row(std::vector<double> coeffs, Relation rel, double rhs) {
    require(static_cast<int>(coeffs.size()) == num_vars, ErrorCode::DimMismatch,
            "constraint row length must equal the variable count");
    constraints.push_back({std::move(coeffs), rel, rhs});
  }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

inline const char* lp_status_name(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal:    return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded:  return "unbounded";
  }
  return "unknown";
}

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double objective_value = 0.0;
};

// Debug sink; when set, lp_solve reports every instance it solves.
inline std::function<void(const LinearProgram&, const LpSolution&)>& lp_dump_hook() {
  static std::function<void(const LinearProgram&, const LpSolution&)> hook;
  return hook;
}

namespace detail {

constexpr double kPivotTol = 1e-10;     // reduced-cost / pivot-entry threshold
constexpr double kFeasTol = 1e-8;       // feasibility recheck on the original LP

// Full-tableau two-phase primal simplex. Dantzig pricing with a permanent
// switch to Bland's rule after a long degenerate streak.
class SimplexTableau {
 public:
  SimplexTableau(int rows, int cols)
      : m_(rows), n_(cols), t_(static_cast<std::size_t>((rows + 1) * (cols + 1)), 0.0),
        basis_(static_cast<std::size_t>(rows), -1),
        banned_(static_cast<std::size_t>(cols), false) {}

  double& at(int i, int j) { return t_[static_cast<std::size_t>(i * (n_ + 1) + j)]; }
  double at(int i, int j) const { return t_[static_cast<std::size_t>(i * (n_ + 1) + j)]; }
  double& rhs(int i) { return at(i, n_); }
  double& obj(int j) { return at(m_, j); }
  double objective_value() const { return at(m_, n_); }
  int rows() const { return m_; }
  int cols() const { return n_; }
  std::vector<int>& basis() { return basis_; }
  void ban_column(int j) { banned_[static_cast<std::size_t>(j)] = true; }

  void pivot(int r, int c) {
    double p = at(r, c);
    double inv = 1.0 / p;
    for (int j = 0; j <= n_; ++j) at(r, j) *= inv;
    at(r, c) = 1.0;
    for (int i = 0; i <= m_ + 0; ++i) {
      if (i == r) continue;
      double f = at(i, c);
      if (f == 0.0) continue;
      for (int j = 0; j <= n_; ++j) at(i, j) -= f * at(r, j);
      at(i, c) = 0.0;
    }
    basis_[static_cast<std::size_t>(r)] = c;
  }

  // Runs the simplex loop on the current objective row. Returns true when an
  // optimum is reached, false when the objective is unbounded above.
  bool iterate() {
    bool bland = false;
    long degenerate_streak = 0;
    const long bland_threshold = 3L * (m_ + n_);
    const long iteration_cap = 2000L + 200L * (m_ + n_);
    double last_obj = objective_value();
    for (long iter = 0; iter < iteration_cap; ++iter) {
      int c = choose_entering(bland);
      if (c < 0) return true;  // no improving column: optimal
      int r = ratio_test(c);
      if (r < 0) return false;  // unbounded direction
      pivot(r, c);
      double now = objective_value();
      if (now <= last_obj + 1e-12) {
        if (++degenerate_streak > bland_threshold) bland = true;
      } else {
        degenerate_streak = 0;
      }
      last_obj = now;
    }
    fail(ErrorCode::NumericalFailure, "simplex iteration cap exceeded");
  }

 private:
  int choose_entering(bool bland) const {
    int best = -1;
    double best_val = -kPivotTol;
    for (int j = 0; j < n_; ++j) {
      if (banned_[static_cast<std::size_t>(j)]) continue;
      double rj = at(m_, j);
      if (rj < best_val) {
        if (bland) return j;  // first improving index
        best_val = rj;
        best = j;
      }
    }
    return best;
  }

  int ratio_test(int c) const {
    int best = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m_; ++i) {
      double a = at(i, c);
      if (a <= kPivotTol) continue;
      double ratio = at(i, n_) / a;
      if (ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 && best >= 0 &&
           basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(best)])) {
        best_ratio = ratio;
        best = i;
      }
    }
    return best;
  }

  int m_, n_;
  std::vector<double> t_;
  std::vector<int> basis_;
  std::vector<bool> banned_;
};

// Mapping from an original variable onto standard-form columns.
struct VarMap {
  int pos = -1;        // column of the nonnegative part
  int neg = -1;        // column of the negated part (free split)
  double shift = 0.0;  // x = shift + sign * y
  double sign = 1.0;
};

}  // namespace detail

inline LpSolution lp_solve(const LinearProgram& lp) {
  using detail::kPivotTol;
  require(lp.num_vars >= 1, ErrorCode::DimMismatch, "LP needs at least one variable");
  require(static_cast<int>(lp.objective.size()) == lp.num_vars, ErrorCode::DimMismatch,
          "objective length must equal the variable count");

  // Standard-form conversion: every variable becomes one or two nonnegative
  // columns, finite upper bounds become extra rows, rhs is made nonnegative.
  std::vector<detail::VarMap> vmap(static_cast<std::size_t>(lp.num_vars));
  int std_vars = 0;
  struct StdRow {
    std::vector<std::pair<int, double>> entries;
    Relation rel;
    double rhs;
  };
  std::vector<StdRow> rows;

  for (int j = 0; j < lp.num_vars; ++j) {
    auto& vm = vmap[static_cast<std::size_t>(j)];
    const auto& lo = lp.lower[static_cast<std::size_t>(j)];
    const auto& hi = lp.upper[static_cast<std::size_t>(j)];
    if (lo && hi)
      require(*lo <= *hi + 1e-15, ErrorCode::MalformedInput, "variable bounds cross");
    if (lo) {
      vm.pos = std_vars++;
      vm.shift = *lo;
      vm.sign = 1.0;
      if (hi) rows.push_back({{{vm.pos, 1.0}}, Relation::LessEq, *hi - *lo});
    } else if (hi) {
      vm.pos = std_vars++;
      vm.shift = *hi;
      vm.sign = -1.0;
    } else {
      vm.pos = std_vars++;
      vm.neg = std_vars++;
    }
  }

  for (const auto& c : lp.constraints) {
    require(static_cast<int>(c.coeffs.size()) == lp.num_vars, ErrorCode::DimMismatch,
            "constraint row length must equal the variable count");
    StdRow row;
    row.rel = c.relation;
    double rhs = c.rhs;
    for (int j = 0; j < lp.num_vars; ++j) {
      double a = c.coeffs[static_cast<std::size_t>(j)];
      if (a == 0.0) continue;
      const auto& vm = vmap[static_cast<std::size_t>(j)];
      rhs -= a * vm.shift;
      row.entries.push_back({vm.pos, a * vm.sign});
      if (vm.neg >= 0) row.entries.push_back({vm.neg, -a});
    }
    row.rhs = rhs;
    rows.push_back(std::move(row));
  }

  // Flip rows so every rhs is nonnegative, then attach slack / surplus /
  // artificial columns.
  int m = static_cast<int>(rows.size());
  int n_total = std_vars;
  std::vector<int> slack_col(static_cast<std::size_t>(m), -1);
  std::vector<int> art_col(static_cast<std::size_t>(m), -1);
  for (auto& row : rows) {
    if (row.rhs < 0.0) {
      row.rhs = -row.rhs;
      for (auto& e : row.entries) e.second = -e.second;
      if (row.rel == Relation::LessEq) row.rel = Relation::GreaterEq;
      else if (row.rel == Relation::GreaterEq) row.rel = Relation::LessEq;
    }
  }
  for (int i = 0; i < m; ++i) {
    switch (rows[static_cast<std::size_t>(i)].rel) {
      case Relation::LessEq:
        slack_col[static_cast<std::size_t>(i)] = n_total++;
        break;
      case Relation::GreaterEq:
        slack_col[static_cast<std::size_t>(i)] = n_total++;  // surplus, coefficient -1
        art_col[static_cast<std::size_t>(i)] = n_total++;
        break;
      case Relation::Equal:
        art_col[static_cast<std::size_t>(i)] = n_total++;
        break;
    }
  }

  detail::SimplexTableau t(m, n_total);
  bool any_artificial = false;
  for (int i = 0; i < m; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    for (const auto& e : row.entries) t.at(i, e.first) += e.second;
    t.rhs(i) = row.rhs;
    if (row.rel == Relation::LessEq) {
      t.at(i, slack_col[static_cast<std::size_t>(i)]) = 1.0;
      t.basis()[static_cast<std::size_t>(i)] = slack_col[static_cast<std::size_t>(i)];
    } else {
      if (row.rel == Relation::GreaterEq)
        t.at(i, slack_col[static_cast<std::size_t>(i)]) = -1.0;
      t.at(i, art_col[static_cast<std::size_t>(i)]) = 1.0;
      t.basis()[static_cast<std::size_t>(i)] = art_col[static_cast<std::size_t>(i)];
      any_artificial = true;
    }
  }

  // Phase 1: maximize -(sum of artificials). Reduced costs of the initial
  // basis are folded in by summing the artificial rows.
  if (any_artificial) {
    for (int i = 0; i < m; ++i) {
      if (art_col[static_cast<std::size_t>(i)] < 0) continue;
      for (int j = 0; j <= t.cols(); ++j) t.at(m, j) -= t.at(i, j);
    }
    for (int i = 0; i < m; ++i)
      if (art_col[static_cast<std::size_t>(i)] >= 0) t.obj(art_col[static_cast<std::size_t>(i)]) += 1.0;
    if (!t.iterate())
      fail(ErrorCode::NumericalFailure, "phase-1 objective reported unbounded");
    if (t.objective_value() < -1e-7) {
      LpSolution sol;
      sol.status = LpStatus::Infeasible;
      if (lp_dump_hook()) lp_dump_hook()(lp, sol);
      return sol;
    }
    // Drive leftover artificials out of the basis; ban their columns.
    for (int i = 0; i < m; ++i) {
      int b = t.basis()[static_cast<std::size_t>(i)];
      bool is_art = false;
      for (int k = 0; k < m; ++k)
        if (art_col[static_cast<std::size_t>(k)] == b) { is_art = true; break; }
      if (!is_art) continue;
      int enter = -1;
      for (int j = 0; j < std_vars + 0; ++j)
        if (std::abs(t.at(i, j)) > kPivotTol) { enter = j; break; }
      if (enter < 0) {
        for (int j = std_vars; j < t.cols(); ++j) {
          bool jart = false;
          for (int k = 0; k < m; ++k)
            if (art_col[static_cast<std::size_t>(k)] == j) { jart = true; break; }
          if (!jart && std::abs(t.at(i, j)) > kPivotTol) { enter = j; break; }
        }
      }
      if (enter >= 0) t.pivot(i, enter);
      // else: redundant row, artificial stays basic at level zero
    }
    for (int i = 0; i < m; ++i)
      if (art_col[static_cast<std::size_t>(i)] >= 0) t.ban_column(art_col[static_cast<std::size_t>(i)]);
  }

  // Phase 2: rebuild the reduced-cost row for the real objective.
  std::vector<double> std_cost(static_cast<std::size_t>(n_total), 0.0);
  for (int j = 0; j < lp.num_vars; ++j) {
    const auto& vm = vmap[static_cast<std::size_t>(j)];
    double c = lp.objective[static_cast<std::size_t>(j)];
    std_cost[static_cast<std::size_t>(vm.pos)] += c * vm.sign;
    if (vm.neg >= 0) std_cost[static_cast<std::size_t>(vm.neg)] -= c;
  }
  for (int j = 0; j <= t.cols(); ++j) t.at(m, j) = 0.0;
  for (int i = 0; i < m; ++i) {
    double cb = std_cost[static_cast<std::size_t>(t.basis()[static_cast<std::size_t>(i)])];
    if (cb == 0.0) continue;
    for (int j = 0; j <= t.cols(); ++j) t.at(m, j) += cb * t.at(i, j);
  }
  for (int j = 0; j < t.cols(); ++j) t.obj(j) -= std_cost[static_cast<std::size_t>(j)];

  LpSolution sol;
  if (!t.iterate()) {
    sol.status = LpStatus::Unbounded;
    if (lp_dump_hook()) lp_dump_hook()(lp, sol);
    return sol;
  }

  // Extract the standard-form point and map back through the transforms.
  std::vector<double> y(static_cast<std::size_t>(n_total), 0.0);
  for (int i = 0; i < m; ++i) y[static_cast<std::size_t>(t.basis()[static_cast<std::size_t>(i)])] = t.rhs(i);
  sol.x.assign(static_cast<std::size_t>(lp.num_vars), 0.0);
  for (int j = 0; j < lp.num_vars; ++j) {
    const auto& vm = vmap[static_cast<std::size_t>(j)];
    double v = vm.shift + vm.sign * y[static_cast<std::size_t>(vm.pos)];
    if (vm.neg >= 0) v -= y[static_cast<std::size_t>(vm.neg)];
    sol.x[static_cast<std::size_t>(j)] = v;
  }
  sol.objective_value = 0.0;
  for (int j = 0; j < lp.num_vars; ++j)
    sol.objective_value += lp.objective[static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)];
  sol.status = LpStatus::Optimal;

  // Certify the claim: an Optimal status must satisfy the original rows.
  for (const auto& c : lp.constraints) {
    double lhs = 0.0;
    double scale = std::abs(c.rhs);
    for (int j = 0; j < lp.num_vars; ++j) {
      lhs += c.coeffs[static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)];
      scale += std::abs(c.coeffs[static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)]);
    }
    double tol = detail::kFeasTol * std::max(1.0, scale);
    bool ok = true;
    switch (c.relation) {
      case Relation::LessEq:    ok = lhs <= c.rhs + tol; break;
      case Relation::Equal:     ok = std::abs(lhs - c.rhs) <= tol; break;
      case Relation::GreaterEq: ok = lhs >= c.rhs - tol; break;
    }
    if (!ok) fail(ErrorCode::NumericalFailure, "simplex returned an infeasible optimum");
  }
  for (int j = 0; j < lp.num_vars; ++j) {
    const auto& lo = lp.lower[static_cast<std::size_t>(j)];
    const auto& hi = lp.upper[static_cast<std::size_t>(j)];
    if (lo && sol.x[static_cast<std::size_t>(j)] < *lo - detail::kFeasTol)
      fail(ErrorCode::NumericalFailure, "simplex violated a lower bound");
    if (hi && sol.x[static_cast<std::size_t>(j)] > *hi + detail::kFeasTol)
      fail(ErrorCode::NumericalFailure, "simplex violated an upper bound");
  }

  if (lp_dump_hook()) lp_dump_hook()(lp, sol);
  return sol;
}

}  // namespace normlab
