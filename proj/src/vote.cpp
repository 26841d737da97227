#include "drcec/vote.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "drcec/error.hpp"

namespace drcec {

ColorId TieBreaker::pick(std::span<const ColorId> candidates) {
  if (!rng_ || candidates.size() == 1) return candidates.front();
  std::uniform_int_distribution<std::size_t> dist(0, candidates.size() - 1);
  return candidates[dist(*rng_)];
}

namespace {

template <class Better>
std::vector<std::vector<ColorId>> extremal_sets(const LabeledHypergraph& h, Better better) {
  std::vector<std::vector<ColorId>> sets(h.num_nodes());
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    const auto row = h.color_degrees(v);
    for (ColorId c = 0; c < row.size(); ++c) {
      if (sets[v].empty() || better(row[c], row[sets[v].front()])) {
        sets[v].assign(1, c);
      } else if (row[c] == row[sets[v].front()]) {
        sets[v].push_back(c);
      }
    }
  }
  return sets;
}

Clustering vote(const std::vector<std::vector<ColorId>>& sets, TieBreaker& ties) {
  Clustering c;
  c.assignment.reserve(sets.size());
  for (const auto& s : sets) c.assignment.push_back(ties.pick(s));
  return c;
}

bool member_everywhere(const std::vector<std::vector<ColorId>>& sets, const Clustering& c) {
  for (std::size_t v = 0; v < sets.size(); ++v) {
    if (!std::binary_search(sets[v].begin(), sets[v].end(), c[v])) return false;
  }
  return true;
}

void require_colors(const LabeledHypergraph& h) {
  if (h.num_colors() == 0 && h.num_nodes() > 0) {
    throw InputError("hypergraph has no colors to assign");
  }
}

}  // namespace

std::vector<std::vector<ColorId>> minority_sets(const LabeledHypergraph& h) {
  return extremal_sets(h, [](int a, int b) { return a < b; });
}

std::vector<std::vector<ColorId>> majority_sets(const LabeledHypergraph& h) {
  return extremal_sets(h, [](int a, int b) { return a > b; });
}

bool is_minority_vote(const LabeledHypergraph& h, const Clustering& c) {
  return member_everywhere(minority_sets(h), c);
}

bool is_majority_vote(const LabeledHypergraph& h, const Clustering& c) {
  return member_everywhere(majority_sets(h), c);
}

bool minority_vote_unique(const LabeledHypergraph& h) {
  for (const auto& s : minority_sets(h)) {
    if (s.size() != 1) return false;
  }
  return true;
}

Clustering majority_vote(const LabeledHypergraph& h, TieBreaker& ties) {
  require_colors(h);
  return vote(majority_sets(h), ties);
}

Clustering minority_vote(const LabeledHypergraph& h, TieBreaker& ties) {
  require_colors(h);
  return vote(minority_sets(h), ties);
}

Clustering majority_vote(const LabeledHypergraph& h) {
  auto ties = TieBreaker::deterministic();
  return majority_vote(h, ties);
}

Clustering minority_vote(const LabeledHypergraph& h) {
  auto ties = TieBreaker::deterministic();
  return minority_vote(h, ties);
}

Clustering naive_optimum(const LabeledHypergraph& h, double beta) {
  return beta > 1.0 ? minority_vote(h) : majority_vote(h);
}

void check_enumeration_budget(const LabeledHypergraph& h, const EnumerationBudget& budget) {
  require_colors(h);
  const std::size_t n = h.num_nodes();
  if (n > budget.node_cap) {
    throw BudgetExceeded("exhaustive search limited to " + std::to_string(budget.node_cap) +
                         " nodes, instance has " + std::to_string(n));
  }
  const double evaluations = std::pow(static_cast<double>(h.num_colors()), static_cast<double>(n));
  if (evaluations > static_cast<double>(budget.max_evaluations)) {
    throw BudgetExceeded("exhaustive search needs " + std::to_string(h.num_colors()) + "^" +
                         std::to_string(n) + " evaluations, budget is " +
                         std::to_string(budget.max_evaluations));
  }
}

ExactSolution exact_ilp(const LabeledHypergraph& h, double beta,
                        const EnumerationBudget& budget) {
  if (!(beta >= 0.0)) throw InputError("beta must be non-negative");
  ExactSolution best;
  double best_total = 0.0;
  bool found = false;
  for_each_clustering(h, budget, [&](const Clustering& c) {
    const auto b = drcec_objective(h, c, beta);
    const double total = b.total();
    if (!found || total < best_total - 1e-9 * std::max(1.0, std::abs(best_total))) {
      found = true;
      best_total = total;
      best.clustering = c;
      best.breakdown = b;
    }
  });
  return best;
}

std::vector<Clustering> x0_set(const LabeledHypergraph& h, const EnumerationBudget& budget) {
  std::vector<Clustering> optimal;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for_each_clustering(h, budget, [&](const Clustering& c) {
    std::size_t cost = 0;
    for (const auto& e : h.edges()) cost += edge_satisfied(e, c) ? 0 : 1;
    if (cost < best) {
      best = cost;
      optimal.clear();
    }
    if (cost == best) optimal.push_back(c);
  });
  return optimal;
}

std::optional<double> deviation_threshold(const LabeledHypergraph& h, NodeId v,
                                          const Clustering& x_ce,
                                          const EnumerationBudget& budget) {
  if (v >= h.num_nodes()) throw InputError("node id out of range");
  validate_clustering(h, x_ce);
  const auto optimal = x0_set(h, budget);  // lexicographically sorted
  if (!std::binary_search(optimal.begin(), optimal.end(), x_ce)) {
    throw InputError("reference clustering is not optimal at beta = 0");
  }

  // E(v, x) = d_v^{x(v)}; track the smallest value reachable outside X0.
  int min_outside = std::numeric_limits<int>::max();
  for_each_clustering(h, budget, [&](const Clustering& c) {
    if (std::binary_search(optimal.begin(), optimal.end(), c)) return;
    min_outside = std::min(min_outside, h.color_degree(v, c[v]));
  });
  if (min_outside == std::numeric_limits<int>::max()) return std::nullopt;

  const int delta = h.color_degree(v, x_ce[v]) - min_outside;
  if (delta <= 0) return std::nullopt;
  return static_cast<double>(h.degree(v)) / delta;
}

}  // namespace drcec
