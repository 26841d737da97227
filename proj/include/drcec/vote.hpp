#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "drcec/hypergraph.hpp"
#include "drcec/metrics.hpp"

namespace drcec {

/// Picks one color out of a tie set: the lowest index, or uniformly at random
/// from a seeded generator.
class TieBreaker {
 public:
  static TieBreaker deterministic() { return TieBreaker(); }
  static TieBreaker seeded(std::uint64_t seed) { return TieBreaker(seed); }

  bool randomized() const { return rng_.has_value(); }

  /// `candidates` must be non-empty and sorted ascending.
  ColorId pick(std::span<const ColorId> candidates);

 private:
  TieBreaker() = default;
  explicit TieBreaker(std::uint64_t seed) : rng_(std::in_place, seed) {}

  std::optional<std::mt19937_64> rng_;
};

/// M_v for every node: colors attaining the node's minimum color degree.
std::vector<std::vector<ColorId>> minority_sets(const LabeledHypergraph& h);
std::vector<std::vector<ColorId>> majority_sets(const LabeledHypergraph& h);

bool is_minority_vote(const LabeledHypergraph& h, const Clustering& c);
bool is_majority_vote(const LabeledHypergraph& h, const Clustering& c);

/// True when every node has a single least-experienced color.
bool minority_vote_unique(const LabeledHypergraph& h);

Clustering majority_vote(const LabeledHypergraph& h, TieBreaker& ties);
Clustering minority_vote(const LabeledHypergraph& h, TieBreaker& ties);
Clustering majority_vote(const LabeledHypergraph& h);
Clustering minority_vote(const LabeledHypergraph& h);

/// Maximizer of naive_objective: since E + D is constant per node, the
/// objective equals beta*const + (1 - beta)*sum E, so majority vote wins for
/// beta < 1 and minority vote for beta > 1. beta == 1 returns majority vote.
Clustering naive_optimum(const LabeledHypergraph& h, double beta);

struct EnumerationBudget {
  std::size_t node_cap = 12;
  std::uint64_t max_evaluations = std::uint64_t{1} << 24;
};

/// Throws BudgetExceeded when exhaustive enumeration of `h` is not allowed.
void check_enumeration_budget(const LabeledHypergraph& h, const EnumerationBudget& budget);

/// Calls `visit(const Clustering&)` for all k^n clusterings in lexicographic
/// order of the assignment vector.
template <class Visit>
void for_each_clustering(const LabeledHypergraph& h, const EnumerationBudget& budget,
                         Visit&& visit) {
  check_enumeration_budget(h, budget);
  const std::size_t n = h.num_nodes();
  const ColorId k = static_cast<ColorId>(h.num_colors());
  Clustering c{std::vector<ColorId>(n, 0)};
  while (true) {
    visit(static_cast<const Clustering&>(c));
    std::size_t i = n;
    while (true) {
      if (i == 0) return;
      --i;
      if (++c.assignment[i] < k) break;
      c.assignment[i] = 0;
    }
  }
}

struct ExactSolution {
  Clustering clustering;
  ObjectiveBreakdown breakdown;
};

/// Globally optimal DRCEC clustering by enumeration; ties go to the
/// lexicographically smallest assignment.
ExactSolution exact_ilp(const LabeledHypergraph& h, double beta,
                        const EnumerationBudget& budget = {});

/// All optimal clusterings of the unregularized (beta = 0) objective.
std::vector<Clustering> x0_set(const LabeledHypergraph& h, const EnumerationBudget& budget = {});

/// d(v) / dE_v where dE_v = max over clusterings x outside X0 of
/// d_v^{x_ce(v)} - d_v^{x(v)}. Empty when dE_v <= 0. Throws InputError when
/// `x_ce` is not in X0.
std::optional<double> deviation_threshold(const LabeledHypergraph& h, NodeId v,
                                          const Clustering& x_ce,
                                          const EnumerationBudget& budget = {});

}  // namespace drcec
