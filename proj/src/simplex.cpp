#include "drcec/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "drcec/error.hpp"

namespace drcec {

void LpProblem::validate() const {
  if (cost.size() != num_vars) throw InputError("cost vector length != num_vars");
  for (double c : cost) {
    if (!std::isfinite(c)) throw InputError("non-finite cost coefficient");
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].coeffs.size() != num_vars) {
      throw InputError("row " + std::to_string(i) + " length != num_vars");
    }
    if (!std::isfinite(rows[i].rhs)) throw InputError("non-finite right-hand side");
    for (double a : rows[i].coeffs) {
      if (!std::isfinite(a)) throw InputError("non-finite constraint coefficient");
    }
  }
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

namespace {

// Dense tableau over [original | slack/surplus | artificial | rhs].
class Tableau {
 public:
  Tableau(const LpProblem& p, const LpTolerances& tol) : tol_(tol), n_(p.num_vars), m_(p.num_rows()) {
    sign_.assign(m_, 1.0);
    std::vector<int> slack_col(m_, -1);
    std::vector<double> slack_coef(m_, 0.0);
    std::vector<bool> needs_art(m_, false);

    std::size_t next = n_;
    for (std::size_t i = 0; i < m_; ++i) {
      const LpRow& r = p.rows[i];
      if (r.sense == RowSense::Equal) {
        if (r.rhs < 0.0) sign_[i] = -1.0;
        needs_art[i] = true;
      } else if (r.rhs > 0.0) {
        slack_col[i] = static_cast<int>(next++);  // surplus
        slack_coef[i] = -1.0;
        needs_art[i] = true;
      } else {
        sign_[i] = -1.0;  // flip to a <= row with non-negative rhs
        slack_col[i] = static_cast<int>(next++);
        slack_coef[i] = 1.0;
      }
    }
    first_art_ = next;
    std::vector<int> art_col(m_, -1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (needs_art[i]) art_col[i] = static_cast<int>(next++);
    }
    cols_ = next;
    width_ = cols_ + 1;

    data_.assign(m_ * width_, 0.0);
    basis_.assign(m_, 0);
    identity_col_.assign(m_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      const LpRow& r = p.rows[i];
      double* row = &data_[i * width_];
      for (std::size_t j = 0; j < n_; ++j) row[j] = sign_[i] * r.coeffs[j];
      row[cols_] = sign_[i] * r.rhs;
      if (slack_col[i] >= 0) row[slack_col[i]] = slack_coef[i];
      if (art_col[i] >= 0) {
        row[art_col[i]] = 1.0;
        basis_[i] = static_cast<std::size_t>(art_col[i]);
      } else {
        basis_[i] = static_cast<std::size_t>(slack_col[i]);
      }
      identity_col_[i] = basis_[i];
    }
    obj_.assign(width_, 0.0);
  }

  LpSolution run(const LpProblem& p) {
    LpSolution sol;
    sol.y.assign(m_, 0.0);

    // Phase 1: minimize the sum of artificials.
    if (first_art_ < cols_) {
      std::fill(obj_.begin(), obj_.end(), 0.0);
      for (std::size_t j = first_art_; j < cols_; ++j) obj_[j] = 1.0;
      for (std::size_t i = 0; i < m_; ++i) {
        if (is_artificial(basis_[i])) {
          const double* row = &data_[i * width_];
          for (std::size_t j = 0; j < width_; ++j) obj_[j] -= row[j];
        }
      }
      if (iterate(sol.iterations) != Outcome::Optimal) {
        throw NumericalFailure("phase 1 reported an unbounded objective");
      }
      double scale = 1.0;
      for (const auto& r : p.rows) scale = std::max(scale, std::abs(r.rhs));
      if (-obj_[cols_] > tol_.feasibility * scale) {
        sol.status = LpStatus::Infeasible;
        return sol;
      }
      drive_out_artificials();
    }

    // Phase 2.
    std::fill(obj_.begin(), obj_.end(), 0.0);
    for (std::size_t j = 0; j < n_; ++j) obj_[j] = p.cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const double cb = basis_[i] < n_ ? p.cost[basis_[i]] : 0.0;
      if (cb == 0.0) continue;
      const double* row = &data_[i * width_];
      for (std::size_t j = 0; j < width_; ++j) obj_[j] -= cb * row[j];
    }
    if (iterate(sol.iterations) == Outcome::Unbounded) {
      sol.status = LpStatus::Unbounded;
      return sol;
    }

    sol.status = LpStatus::Optimal;
    sol.x.assign(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) sol.x[basis_[i]] = std::max(0.0, data_[i * width_ + cols_]);
    }
    for (std::size_t i = 0; i < m_; ++i) sol.y[i] = -sign_[i] * obj_[identity_col_[i]];
    sol.objective = 0.0;
    for (std::size_t j = 0; j < n_; ++j) sol.objective += p.cost[j] * sol.x[j];
    return sol;
  }

 private:
  enum class Outcome { Optimal, Unbounded };

  bool is_artificial(std::size_t col) const { return col >= first_art_; }

  Outcome iterate(std::size_t& iterations) {
    bool bland = false;
    std::size_t stalled = 0;
    while (true) {
      if (++iterations > tol_.max_iterations) {
        throw NumericalFailure("simplex iteration limit exceeded");
      }
      // Pricing: Dantzig until stalling, then Bland (smallest index).
      std::size_t enter = cols_;
      double best = -tol_.reduced_cost;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (obj_[j] < best) {
          enter = j;
          if (bland) break;
          best = obj_[j];
        }
      }
      if (enter == cols_) return Outcome::Optimal;

      // Ratio test; ties go to the smallest basic index under Bland, else to
      // the largest pivot element.
      std::size_t leave = m_;
      double best_ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        const double a = data_[i * width_ + enter];
        if (a <= tol_.pivot) continue;
        const double ratio = std::max(0.0, data_[i * width_ + cols_]) / a;
        if (leave == m_ || ratio < best_ratio - 1e-12 * (1.0 + best_ratio)) {
          leave = i;
          best_ratio = ratio;
        } else if (ratio <= best_ratio + 1e-12 * (1.0 + best_ratio)) {
          const bool take = bland ? basis_[i] < basis_[leave]
                                  : a > data_[leave * width_ + enter];
          if (take) leave = i;
        }
      }
      if (leave == m_) return Outcome::Unbounded;

      if (best_ratio <= 1e-12) {
        if (++stalled > tol_.stall_threshold) bland = true;
      } else {
        stalled = 0;
      }
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t q) {
    double* prow = &data_[r * width_];
    const double inv = 1.0 / prow[q];
    for (std::size_t j = 0; j < width_; ++j) prow[j] *= inv;
    prow[q] = 1.0;
    auto eliminate = [&](double* row) {
      const double f = row[q];
      if (f == 0.0) return;
      for (std::size_t j = 0; j < width_; ++j) {
        row[j] -= f * prow[j];
        if (std::abs(row[j]) < 1e-14) row[j] = 0.0;
      }
      row[q] = 0.0;
    };
    for (std::size_t i = 0; i < m_; ++i) {
      if (i != r) eliminate(&data_[i * width_]);
    }
    eliminate(obj_.data());
    basis_[r] = q;
  }

  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      const double* row = &data_[i * width_];
      std::size_t best = cols_;
      double best_abs = tol_.pivot;
      for (std::size_t j = 0; j < first_art_; ++j) {
        if (std::abs(row[j]) > best_abs) {
          best = j;
          best_abs = std::abs(row[j]);
        }
      }
      // No candidate: the row is redundant and its artificial stays at zero.
      if (best != cols_) pivot(i, best);
    }
  }

  LpTolerances tol_;
  std::size_t n_;
  std::size_t m_;
  std::size_t first_art_ = 0;
  std::size_t cols_ = 0;
  std::size_t width_ = 0;
  std::vector<double> data_;
  std::vector<double> obj_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> identity_col_;
  std::vector<double> sign_;
};

double row_activity(const LpRow& r, const std::vector<double>& x) {
  double s = 0.0;
  for (std::size_t j = 0; j < x.size(); ++j) s += r.coeffs[j] * x[j];
  return s;
}

}  // namespace

LpSolution solve(const LpProblem& problem, const LpTolerances& tol) {
  problem.validate();
  Tableau t(problem, tol);
  return t.run(problem);
}

KktReport check_kkt(const LpProblem& p, const LpSolution& sol) {
  KktReport rep;
  if (sol.x.size() != p.num_vars || sol.y.size() != p.num_rows()) {
    throw InputError("solution dimensions do not match the problem");
  }
  std::vector<double> aty(p.num_vars, 0.0);
  double bty = 0.0;
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    const LpRow& r = p.rows[i];
    const double slack = row_activity(r, sol.x) - r.rhs;
    if (r.sense == RowSense::Equal) {
      rep.primal_violation = std::max(rep.primal_violation, std::abs(slack));
    } else {
      rep.primal_violation = std::max(rep.primal_violation, -slack);
      rep.dual_violation = std::max(rep.dual_violation, -sol.y[i]);
      rep.complementarity_violation =
          std::max(rep.complementarity_violation, std::abs(sol.y[i] * slack));
    }
    for (std::size_t j = 0; j < p.num_vars; ++j) aty[j] += r.coeffs[j] * sol.y[i];
    bty += r.rhs * sol.y[i];
  }
  double ctx = 0.0;
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    rep.primal_violation = std::max(rep.primal_violation, -sol.x[j]);
    const double reduced = p.cost[j] - aty[j];
    rep.dual_violation = std::max(rep.dual_violation, -reduced);
    rep.complementarity_violation =
        std::max(rep.complementarity_violation, std::abs(sol.x[j] * reduced));
    ctx += p.cost[j] * sol.x[j];
  }
  rep.duality_gap = std::abs(ctx - bty);
  return rep;
}

std::string describe(const KktReport& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "primal_violation=%.3e dual_violation=%.3e duality_gap=%.3e "
                "complementarity_violation=%.3e",
                r.primal_violation, r.dual_violation, r.duality_gap,
                r.complementarity_violation);
  return buf;
}

std::string dump_triplets(const LpProblem& p) {
  std::string out;
  char buf[96];
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    if (p.cost[j] == 0.0) continue;
    std::snprintf(buf, sizeof buf, "cost %zu %.17g\n", j, p.cost[j]);
    out += buf;
  }
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    const LpRow& r = p.rows[i];
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      if (r.coeffs[j] == 0.0) continue;
      std::snprintf(buf, sizeof buf, "row %zu %zu %.17g\n", i, j, r.coeffs[j]);
      out += buf;
    }
    std::snprintf(buf, sizeof buf, "rhs %zu %s %.17g\n", i,
                  r.sense == RowSense::Equal ? "eq" : "ge", r.rhs);
    out += buf;
  }
  return out;
}

}  // namespace drcec
