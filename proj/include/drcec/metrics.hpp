#pragma once

#include <cstddef>
#include <vector>

#include "drcec/hypergraph.hpp"

namespace drcec {

/// Objective value of a clustering split into its two terms.
struct ObjectiveBreakdown {
  std::size_t edge_cost = 0;           // violated hyperedges
  std::size_t experience_penalty = 0;  // sum over v of d_v^{C(v)}
  double beta = 0.0;

  double total() const {
    return static_cast<double>(edge_cost) + beta * static_cast<double>(experience_penalty);
  }
};

struct ColorScores {
  long diversity = 0;   // D(i)
  long experience = 0;  // E(i)
};

/// Per-color (D(i), E(i)) pairs, indexed by color.
std::vector<ColorScores> diversity_experience_scores(const LabeledHypergraph& h,
                                                     const Clustering& c);

/// sum_i E(i) + beta * D(i); larger is better.
double naive_objective(const LabeledHypergraph& h, const Clustering& c, double beta);

ObjectiveBreakdown drcec_objective(const LabeledHypergraph& h, const Clustering& c,
                                   double beta);

/// Whether every node of `e` is assigned to the edge's color.
bool edge_satisfied(const Hyperedge& e, const Clustering& c);

/// Fraction of hyperedges contained in their own color's cluster. Throws
/// InputError when the hypergraph has no edges.
double edge_satisfaction(const LabeledHypergraph& h, const Clustering& c);

/// sum_i |C(i)|/|V| * sum_{v in C(i)} d_v^i / d(v), nodes with d(v) = 0 skipped.
/// Can exceed 1; see f_within_normalized for the per-cluster average form.
double f_within(const LabeledHypergraph& h, const Clustering& c);

/// Same weighting as f_within but each cluster's ratio sum is divided by the
/// number of contributing nodes, so the result lies in [0, 1].
double f_within_normalized(const LabeledHypergraph& h, const Clustering& c);

/// sum_{v in C(i)} d_v^i / d(v), nodes with d(v) = 0 skipped.
double experience_homogeneity(const LabeledHypergraph& h, const Clustering& c, ColorId i);

/// Cluster sizes indexed by color.
std::vector<std::size_t> cluster_sizes(const LabeledHypergraph& h, const Clustering& c);

}  // namespace drcec
