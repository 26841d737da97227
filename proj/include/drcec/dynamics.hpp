#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string_view>
#include <vector>

#include "drcec/hypergraph.hpp"
#include "drcec/metrics.hpp"
#include "drcec/simplex.hpp"
#include "drcec/vote.hpp"

namespace drcec {

enum class Method { LpRound, Exact, Minority, Majority };

const char* to_string(Method m);
/// Accepts "lp-round", "exact", "minority", "majority".
Method parse_method(std::string_view name);

/// Clusters `h` with the given method. Randomized tie-breaking applies to the
/// vote methods and to LP rounding; the exact oracle keeps its lexicographic
/// rule.
Clustering cluster_with(const LabeledHypergraph& h, Method method, double beta,
                        TieBreaker& ties, const EnumerationBudget& budget = {},
                        const LpTolerances& tol = {});

struct DynamicsConfig {
  double beta = 0.0;
  std::size_t window = 1;
  std::size_t horizon = 1;
  std::optional<std::size_t> warm_start;  // defaults to window
  Method method = Method::LpRound;
  std::uint64_t seed = 0;
  EnumerationBudget budget;
  LpTolerances tolerances;

  std::size_t warm_steps() const { return warm_start.value_or(window); }
  void validate() const;
};

/// The last `capacity` steps of hyperedges. The seed hypergraph's edges are
/// spread round-robin over the initial slots, oldest slot first.
class HistoryWindow {
 public:
  HistoryWindow(const LabeledHypergraph& initial, std::size_t capacity);

  /// G(w, t): all edges currently in the window, oldest first.
  LabeledHypergraph hypergraph() const;

  /// Appends one step of edges and evicts the oldest step beyond capacity.
  void push(std::vector<Hyperedge> step_edges);

  std::size_t capacity() const { return capacity_; }
  std::size_t num_slots() const { return slots_.size(); }

 private:
  std::size_t num_nodes_;
  std::vector<std::string> colors_;
  std::size_t capacity_;
  std::deque<std::vector<Hyperedge>> slots_;
};

/// One hyperedge per non-empty cluster, colored by the cluster's color.
std::vector<Hyperedge> clusters_to_edges(const Clustering& c, std::size_t num_colors);

struct StepOutcome {
  Clustering clustering;
  ObjectiveBreakdown breakdown;
  LabeledHypergraph clustered;  // the window hypergraph that was clustered
};

/// Clusters the current window and pushes the resulting edges into it.
StepOutcome step(HistoryWindow& window, const DynamicsConfig& cfg, TieBreaker& ties);

struct DynamicsStep {
  Clustering clustering;
  ObjectiveBreakdown breakdown;
  std::vector<std::uint8_t> exchanged;  // node changed color vs. the previous step
  std::size_t exchanges = 0;
  std::vector<int> window_degrees;      // d_v^c of the clustered window, row-major
};

struct DynamicsTrace {
  std::size_t num_nodes = 0;
  std::size_t num_colors = 0;
  std::vector<DynamicsStep> steps;
  /// counts[t] holds d_v^c(t+1): assignments of v to c over recorded steps 0..t.
  std::vector<std::vector<int>> counts;

  std::size_t horizon() const { return steps.size(); }
  int count(std::size_t t, NodeId v, ColorId c) const {
    return counts[t - 1][static_cast<std::size_t>(v) * num_colors + c];
  }
};

/// Runs warm_steps() unrecorded steps followed by `horizon` recorded ones.
/// Deterministic given the configuration (including the seed).
DynamicsTrace run(const LabeledHypergraph& initial, const DynamicsConfig& cfg);

/// Per node, max over color pairs of |d_v^c(t) - d_v^c'(t)| / t, for 1 <= t <= T.
std::vector<double> uniformity_gap(const DynamicsTrace& trace, std::size_t t);
double mean_uniformity_gap(const DynamicsTrace& trace, std::size_t t);

/// Fraction of (node, step) pairs that exchange, over recorded steps 2..T.
/// Throws InputError when T < 2.
double mean_exchanges(const DynamicsTrace& trace);

}  // namespace drcec
