#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace drcec {

enum class RowSense { GreaterEqual, Equal };

struct LpRow {
  std::vector<double> coeffs;  // dense, length num_vars
  RowSense sense = RowSense::GreaterEqual;
  double rhs = 0.0;
};

/// min c^T x  s.t.  a_i^T x (>= | =) b_i,  x >= 0.
struct LpProblem {
  std::size_t num_vars = 0;
  std::vector<double> cost;
  std::vector<LpRow> rows;

  std::size_t num_rows() const { return rows.size(); }

  /// Throws InputError on dimension mismatch or non-finite data.
  void validate() const;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> x;
  double objective = 0.0;
  /// One multiplier per row; >= 0 for GreaterEqual rows, free for Equal rows.
  std::vector<double> y;
  std::size_t iterations = 0;
};

struct LpTolerances {
  double feasibility = 1e-7;
  double gap = 1e-6;
  double integrality = 1e-6;
  double pivot = 1e-9;
  double reduced_cost = 1e-9;
  /// Consecutive degenerate pivots before switching to Bland's rule.
  std::size_t stall_threshold = 50;
  std::size_t max_iterations = 100000;
};

/// Two-phase dense tableau simplex. Deterministic for identical input.
/// Throws InputError on malformed problems and NumericalFailure when the
/// iteration limit is hit.
LpSolution solve(const LpProblem& problem, const LpTolerances& tol = {});

struct KktReport {
  double primal_violation = 0.0;          // rows and x >= 0
  double dual_violation = 0.0;            // A^T y <= c and sign of y
  double duality_gap = 0.0;               // |c^T x - b^T y|
  double complementarity_violation = 0.0; // max |y_i (a_i^T x - b_i)|, max |x_j (c - A^T y)_j|

  bool passes(const LpTolerances& tol) const {
    return primal_violation <= tol.feasibility && dual_violation <= tol.feasibility &&
           duality_gap <= tol.gap && complementarity_violation <= tol.gap;
  }
};

KktReport check_kkt(const LpProblem& problem, const LpSolution& solution);

std::string describe(const KktReport& report);

/// Plain-text dump: "cost <col> <value>", "row <row> <col> <value>",
/// "rhs <row> <ge|eq> <value>" lines, zero entries omitted.
std::string dump_triplets(const LpProblem& problem);

}  // namespace drcec
