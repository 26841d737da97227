#include "drcec/lp_encode.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "drcec/error.hpp"

namespace drcec {

DrcecEncoding::DrcecEncoding(const LabeledHypergraph& h)
    : n_(h.num_nodes()), k_(h.num_colors()), m_(h.num_edges()) {
  if (k_ == 0) throw InputError("hypergraph has no colors to assign");
  c_e_.assign(num_columns(), 0.0);
  c_d_.assign(num_columns(), 0.0);
  for (std::size_t e = 0; e < m_; ++e) c_e_[edge_column(e)] = 1.0;
  for (NodeId v = 0; v < n_; ++v) {
    for (ColorId c = 0; c < k_; ++c) {
      const double d = h.color_degree(v, c);
      c_d_[node_color_column(v, c)] = -d;
      const_offset_ += d;
    }
  }
}

std::vector<double> DrcecEncoding::cost(double beta) const {
  std::vector<double> c(num_columns());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = c_e_[j] + beta * c_d_[j];
  return c;
}

LpProblem DrcecEncoding::problem(const LabeledHypergraph& h, double beta) const {
  LpProblem p;
  p.num_vars = num_columns();
  p.cost = cost(beta);
  const double assigned = static_cast<double>(k_) - 1.0;

  auto blank = [&] { return std::vector<double>(p.num_vars, 0.0); };
  for (NodeId v = 0; v < n_; ++v) {
    LpRow lo{blank(), RowSense::GreaterEqual, assigned};
    LpRow hi{blank(), RowSense::GreaterEqual, -assigned};
    for (ColorId c = 0; c < k_; ++c) {
      lo.coeffs[node_color_column(v, c)] = 1.0;
      hi.coeffs[node_color_column(v, c)] = -1.0;
    }
    p.rows.push_back(std::move(lo));
    p.rows.push_back(std::move(hi));
  }
  for (std::size_t e = 0; e < m_; ++e) {
    const Hyperedge& edge = h.edges()[e];
    for (NodeId v : edge.nodes) {
      LpRow r{blank(), RowSense::GreaterEqual, 0.0};
      r.coeffs[edge_column(e)] = 1.0;
      r.coeffs[node_color_column(v, edge.color)] = -1.0;
      p.rows.push_back(std::move(r));
    }
  }
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    LpRow r{blank(), RowSense::GreaterEqual, -1.0};
    r.coeffs[j] = -1.0;
    p.rows.push_back(std::move(r));
  }
  return p;
}

std::vector<double> DrcecEncoding::indicator(const LabeledHypergraph& h,
                                             const Clustering& c) const {
  validate_clustering(h, c);
  std::vector<double> x(num_columns(), 0.0);
  for (NodeId v = 0; v < n_; ++v) {
    for (ColorId col = 0; col < k_; ++col) {
      x[node_color_column(v, col)] = col == c[v] ? 0.0 : 1.0;
    }
  }
  for (std::size_t e = 0; e < m_; ++e) {
    x[edge_column(e)] = edge_satisfied(h.edges()[e], c) ? 0.0 : 1.0;
  }
  return x;
}

double DrcecEncoding::objective_with_offset(const std::vector<double>& x, double beta) const {
  double edge_term = 0.0;
  double div_term = const_offset_;
  for (std::size_t j = 0; j < x.size(); ++j) {
    edge_term += c_e_[j] * x[j];
    div_term += c_d_[j] * x[j];
  }
  return edge_term + beta * div_term;
}

RelaxedSolution solve_relaxation(const LabeledHypergraph& h, const DrcecEncoding& enc,
                                 double beta, const LpTolerances& tol) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw InputError("beta must be finite and >= 0");
  const LpProblem p = enc.problem(h, beta);
  LpSolution s = solve(p, tol);
  if (s.status != LpStatus::Optimal) {
    // The box point x_v^c = (k-1)/k, x_e = 1 is feasible and costs are
    // bounded on [0,1], so anything else is a solver failure.
    throw NumericalFailure(std::string("LP relaxation returned status ") + to_string(s.status));
  }
  RelaxedSolution out;
  out.kkt = check_kkt(p, s);
  if (!out.kkt.passes(tol)) {
    throw NumericalFailure("LP relaxation failed KKT certification: " + describe(out.kkt));
  }
  out.beta = beta;
  out.lp_objective = s.objective;
  out.objective_with_offset = enc.objective_with_offset(s.x, beta);
  out.x = std::move(s.x);
  out.y = std::move(s.y);
  return out;
}

RelaxedSolution solve_relaxation(const LabeledHypergraph& h, double beta,
                                 const LpTolerances& tol) {
  return solve_relaxation(h, DrcecEncoding(h), beta, tol);
}

Clustering round_relaxation(const RelaxedSolution& sol, const DrcecEncoding& enc,
                            TieBreaker& ties, double tie_tol) {
  Clustering out;
  out.assignment.reserve(enc.num_nodes());
  std::vector<ColorId> tied;
  for (NodeId v = 0; v < enc.num_nodes(); ++v) {
    double lowest = sol.x[enc.node_color_column(v, 0)];
    for (ColorId c = 1; c < enc.num_colors(); ++c) {
      lowest = std::min(lowest, sol.x[enc.node_color_column(v, c)]);
    }
    tied.clear();
    for (ColorId c = 0; c < enc.num_colors(); ++c) {
      if (sol.x[enc.node_color_column(v, c)] <= lowest + tie_tol) tied.push_back(c);
    }
    out.assignment.push_back(ties.pick(tied));
  }
  return out;
}

Clustering round_relaxation(const RelaxedSolution& sol, const DrcecEncoding& enc) {
  auto ties = TieBreaker::deterministic();
  return round_relaxation(sol, enc, ties);
}

bool is_integral(const RelaxedSolution& sol, const DrcecEncoding& enc, double tol) {
  for (std::size_t j = 0; j < enc.num_nodes() * enc.num_colors(); ++j) {
    const double x = sol.x[j];
    if (std::abs(x) > tol && std::abs(x - 1.0) > tol) return false;
  }
  return true;
}

Algorithm1Result algorithm1(const LabeledHypergraph& h, double beta, TieBreaker& ties,
                            const LpTolerances& tol) {
  const DrcecEncoding enc(h);
  Algorithm1Result out;
  out.relaxation = solve_relaxation(h, enc, beta, tol);
  out.clustering = round_relaxation(out.relaxation, enc, ties);
  out.breakdown = drcec_objective(h, out.clustering, beta);
  return out;
}

Algorithm1Result algorithm1(const LabeledHypergraph& h, double beta, const LpTolerances& tol) {
  auto ties = TieBreaker::deterministic();
  return algorithm1(h, beta, ties, tol);
}

}  // namespace drcec
