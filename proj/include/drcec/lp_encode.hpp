#pragma once

#include <cstddef>
#include <vector>

#include "drcec/hypergraph.hpp"
#include "drcec/metrics.hpp"
#include "drcec/simplex.hpp"
#include "drcec/vote.hpp"

namespace drcec {

/// Column layout and cost split of the DRCEC LP relaxation
///
///   min c_e^T x + beta * c_d^T x  s.t.  A x >= b,  x >= 0
///
/// over x = (x_v^c for every node/color, x_e for every edge). x_v^c = 1 means
/// v is *not* in cluster c. The regularizer of the integer program equals
/// beta * (const_offset + c_d^T x).
class DrcecEncoding {
 public:
  explicit DrcecEncoding(const LabeledHypergraph& h);

  std::size_t num_nodes() const { return n_; }
  std::size_t num_colors() const { return k_; }
  std::size_t num_edges() const { return m_; }
  std::size_t num_columns() const { return n_ * k_ + m_; }

  std::size_t node_color_column(NodeId v, ColorId c) const { return v * k_ + c; }
  std::size_t edge_column(std::size_t e) const { return n_ * k_ + e; }

  const std::vector<double>& edge_costs() const { return c_e_; }
  const std::vector<double>& diversity_costs() const { return c_d_; }
  double const_offset() const { return const_offset_; }

  /// c_e + beta * c_d.
  std::vector<double> cost(double beta) const;

  /// Rows in order: per node the assignment equality as two >= rows, per
  /// (edge, member) the coupling x_e - x_v^{color(e)} >= 0, per column the
  /// upper bound -x >= -1.
  LpProblem problem(const LabeledHypergraph& h, double beta) const;

  /// 0/1 vector of a clustering (x_v^c = [c != C(v)], x_e = [e violated]).
  std::vector<double> indicator(const LabeledHypergraph& h, const Clustering& c) const;

  /// c_e^T x + beta * (const_offset + c_d^T x).
  double objective_with_offset(const std::vector<double>& x, double beta) const;

 private:
  std::size_t n_;
  std::size_t k_;
  std::size_t m_;
  std::vector<double> c_e_;
  std::vector<double> c_d_;
  double const_offset_ = 0.0;
};

struct RelaxedSolution {
  std::vector<double> x;
  std::vector<double> y;
  double lp_objective = 0.0;           // (c_e + beta c_d)^T x, no offset
  double objective_with_offset = 0.0;  // comparable to drcec_objective().total()
  double beta = 0.0;
  KktReport kkt;
};

/// Solves the LP relaxation. Throws NumericalFailure when the solver does
/// not return a KKT-certified optimum.
RelaxedSolution solve_relaxation(const LabeledHypergraph& h, const DrcecEncoding& enc,
                                 double beta, const LpTolerances& tol = {});
RelaxedSolution solve_relaxation(const LabeledHypergraph& h, double beta,
                                 const LpTolerances& tol = {});

/// Per node, a color minimizing x_v^c. Values within `tie_tol` of the
/// minimum are tied; `ties` picks among them.
Clustering round_relaxation(const RelaxedSolution& sol, const DrcecEncoding& enc,
                            TieBreaker& ties, double tie_tol = 1e-9);
Clustering round_relaxation(const RelaxedSolution& sol, const DrcecEncoding& enc);

/// Whether every node-color variable is within `tol` of 0 or 1.
bool is_integral(const RelaxedSolution& sol, const DrcecEncoding& enc, double tol = 1e-6);

struct Algorithm1Result {
  Clustering clustering;
  ObjectiveBreakdown breakdown;
  RelaxedSolution relaxation;
};

/// Solve the relaxation, then round each node to an argmin color.
Algorithm1Result algorithm1(const LabeledHypergraph& h, double beta, TieBreaker& ties,
                            const LpTolerances& tol = {});
Algorithm1Result algorithm1(const LabeledHypergraph& h, double beta,
                            const LpTolerances& tol = {});

}  // namespace drcec
