#pragma once

// Shared fixtures for the unit and acceptance suites: seeded random
// instances and oracles that recompute quantities from first principles
// without going through the library's own helpers.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "drcec/hypergraph.hpp"
#include "drcec/simplex.hpp"

namespace testing {

struct CorpusShape {
  std::size_t min_nodes = 3, max_nodes = 8;
  std::size_t min_colors = 2, max_colors = 4;
  std::size_t min_edges = 1, max_edges = 10;
  std::size_t max_edge_size = 4;
};

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<std::string> color_names(std::size_t k) {
  std::vector<std::string> names;
  for (std::size_t c = 0; c < k; ++c) names.push_back("c" + std::to_string(c));
  return names;
}

inline drcec::LabeledHypergraph random_hypergraph(std::mt19937_64& rng,
                                                  const CorpusShape& s = {}) {
  const std::size_t n = uniform(rng, s.min_nodes, s.max_nodes);
  const std::size_t k = uniform(rng, s.min_colors, s.max_colors);
  const std::size_t m = uniform(rng, s.min_edges, s.max_edges);
  std::vector<drcec::NodeId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<drcec::NodeId>(i);
  std::vector<drcec::Hyperedge> edges;
  for (std::size_t e = 0; e < m; ++e) {
    std::shuffle(ids.begin(), ids.end(), rng);
    const std::size_t size = uniform(rng, 1, std::min(s.max_edge_size, n));
    drcec::Hyperedge edge;
    edge.color = static_cast<drcec::ColorId>(uniform(rng, 0, k - 1));
    edge.nodes.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(size));
    edges.push_back(std::move(edge));
  }
  return drcec::LabeledHypergraph(n, color_names(k), std::move(edges));
}

inline std::vector<drcec::LabeledHypergraph> corpus(std::size_t count, std::uint64_t seed,
                                                    const CorpusShape& s = {}) {
  std::mt19937_64 rng(seed);
  std::vector<drcec::LabeledHypergraph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_hypergraph(rng, s));
  return out;
}

// The 3-node example: red {0,1}, blue {1,2}.
inline drcec::LabeledHypergraph three_node() {
  return drcec::LabeledHypergraph(3, {"red", "blue"}, {{0, {0, 1}}, {1, {1, 2}}});
}

// Degree table recounted straight from the edge list.
inline std::vector<std::vector<long>> recount(const drcec::LabeledHypergraph& h) {
  std::vector<std::vector<long>> d(h.num_nodes(), std::vector<long>(h.num_colors(), 0));
  for (const auto& e : h.edges())
    for (auto v : e.nodes) ++d[v][e.color];
  return d;
}

// Integer pair (violated edges, experience penalty) by direct counting.
struct RawCost {
  long edges = 0;
  long penalty = 0;
};

inline RawCost raw_cost(const drcec::LabeledHypergraph& h, const std::vector<drcec::ColorId>& a) {
  RawCost r;
  for (const auto& e : h.edges()) {
    bool ok = true;
    for (auto v : e.nodes) ok = ok && a[v] == e.color;
    if (!ok) ++r.edges;
  }
  const auto d = recount(h);
  for (std::size_t v = 0; v < a.size(); ++v) r.penalty += d[v][a[v]];
  return r;
}

// Visits all k^n assignments; the callback sees the raw vector.
template <class F>
void enumerate(std::size_t n, std::size_t k, F&& f) {
  std::vector<drcec::ColorId> a(n, 0);
  for (;;) {
    f(a);
    std::size_t i = 0;
    while (i < n && ++a[i] == k) a[i++] = 0;
    if (i == n) return;
  }
}

// Brute-force DRCEC optimum value.
inline double brute_force_optimum(const drcec::LabeledHypergraph& h, double beta) {
  double best = std::numeric_limits<double>::infinity();
  enumerate(h.num_nodes(), h.num_colors(), [&](const std::vector<drcec::ColorId>& a) {
    const auto r = raw_cost(h, a);
    best = std::min(best, static_cast<double>(r.edges) + beta * static_cast<double>(r.penalty));
  });
  return best;
}

inline bool in_minority_set(const std::vector<long>& row, drcec::ColorId c) {
  return row[c] == *std::min_element(row.begin(), row.end());
}
inline bool in_majority_set(const std::vector<long>& row, drcec::ColorId c) {
  return row[c] == *std::max_element(row.begin(), row.end());
}

// Straight-loop KKT residuals, independent of drcec::check_kkt.
struct Kkt {
  double primal = 0, dual = 0, gap = 0;
};

inline Kkt kkt_residuals(const drcec::LpProblem& p, const drcec::LpSolution& s) {
  Kkt k;
  for (double xj : s.x) k.primal = std::max(k.primal, -xj);
  double by = 0, cx = 0;
  std::vector<double> aty(p.num_vars, 0.0);
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    const auto& r = p.rows[i];
    double ax = 0;
    for (std::size_t j = 0; j < p.num_vars; ++j) {
      ax += r.coeffs[j] * s.x[j];
      aty[j] += r.coeffs[j] * s.y[i];
    }
    const double slack = ax - r.rhs;
    k.primal = std::max(k.primal, r.sense == drcec::RowSense::Equal ? std::abs(slack) : -slack);
    if (r.sense == drcec::RowSense::GreaterEqual) k.dual = std::max(k.dual, -s.y[i]);
    by += r.rhs * s.y[i];
  }
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    cx += p.cost[j] * s.x[j];
    k.dual = std::max(k.dual, aty[j] - p.cost[j]);
  }
  k.gap = std::abs(cx - by);
  return k;
}

// Exhaustive vertex enumeration over bounded LPs: every choice of num_vars
// tight constraints (rows or x_j = 0) that includes all equality rows is
// solved with a full-pivot LU; the best feasible point wins. Returns nullopt
// when no vertex is feasible.
inline std::optional<double> vertex_oracle(const drcec::LpProblem& p, double feas = 1e-9) {
  const std::size_t n = p.num_vars;
  const std::size_t m = p.rows.size();
  const std::size_t total = m + n;
  std::vector<std::size_t> eq;
  for (std::size_t i = 0; i < m; ++i)
    if (p.rows[i].sense == drcec::RowSense::Equal) eq.push_back(i);
  if (eq.size() > n) return std::nullopt;

  auto feasible = [&](const Eigen::VectorXd& x) {
    for (std::size_t j = 0; j < n; ++j)
      if (x[static_cast<Eigen::Index>(j)] < -feas) return false;
    for (const auto& r : p.rows) {
      double ax = 0;
      for (std::size_t j = 0; j < n; ++j) ax += r.coeffs[j] * x[static_cast<Eigen::Index>(j)];
      if (r.sense == drcec::RowSense::Equal ? std::abs(ax - r.rhs) > feas : ax < r.rhs - feas)
        return false;
    }
    return true;
  };

  std::optional<double> best;
  std::vector<bool> pick(total, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  // prev_permutation over a sorted-descending mask walks every n-subset.
  do {
    bool has_eq = true;
    for (auto i : eq) has_eq = has_eq && pick[i];
    if (!has_eq) continue;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(n));
    Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
    Eigen::Index r = 0;
    for (std::size_t t = 0; t < total; ++t) {
      if (!pick[t]) continue;
      if (t < m) {
        for (std::size_t j = 0; j < n; ++j)
          A(r, static_cast<Eigen::Index>(j)) = p.rows[t].coeffs[j];
        b[r] = p.rows[t].rhs;
      } else {
        A(r, static_cast<Eigen::Index>(t - m)) = 1.0;
      }
      ++r;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
    if (lu.rank() < static_cast<Eigen::Index>(n)) continue;
    const Eigen::VectorXd x = lu.solve(b);
    if (!feasible(x)) continue;
    double obj = 0;
    for (std::size_t j = 0; j < n; ++j) obj += p.cost[j] * x[static_cast<Eigen::Index>(j)];
    if (!best || obj < *best) best = obj;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

// Random bounded LP: a handful of >= / = rows plus sum(x) <= cap, so every
// feasible problem has a finite optimum at a vertex.
inline drcec::LpProblem random_bounded_lp(std::mt19937_64& rng, std::size_t max_vars = 10,
                                          std::size_t max_rows = 4) {
  std::uniform_int_distribution<int> coef(-4, 4);
  drcec::LpProblem p;
  p.num_vars = uniform(rng, 1, max_vars);
  for (std::size_t j = 0; j < p.num_vars; ++j) p.cost.push_back(coef(rng));
  const std::size_t rows = uniform(rng, 0, max_rows);
  for (std::size_t i = 0; i < rows; ++i) {
    drcec::LpRow r;
    for (std::size_t j = 0; j < p.num_vars; ++j) r.coeffs.push_back(coef(rng));
    r.rhs = coef(rng);
    r.sense = uniform(rng, 0, 4) == 0 ? drcec::RowSense::Equal : drcec::RowSense::GreaterEqual;
    p.rows.push_back(std::move(r));
  }
  drcec::LpRow cap;
  cap.coeffs.assign(p.num_vars, -1.0);
  cap.rhs = -static_cast<double>(uniform(rng, 1, 6));
  p.rows.push_back(std::move(cap));
  return p;
}

}  // namespace testing
