#include "drcec/dynamics.hpp"

#include <algorithm>
#include <string>

#include "drcec/error.hpp"
#include "drcec/lp_encode.hpp"

namespace drcec {

const char* to_string(Method m) {
  switch (m) {
    case Method::LpRound: return "lp-round";
    case Method::Exact: return "exact";
    case Method::Minority: return "minority";
    case Method::Majority: return "majority";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "lp-round") return Method::LpRound;
  if (name == "exact") return Method::Exact;
  if (name == "minority") return Method::Minority;
  if (name == "majority") return Method::Majority;
  throw InputError("unknown method '" + std::string(name) + "'");
}

Clustering cluster_with(const LabeledHypergraph& h, Method method, double beta,
                        TieBreaker& ties, const EnumerationBudget& budget,
                        const LpTolerances& tol) {
  switch (method) {
    case Method::LpRound: return algorithm1(h, beta, ties, tol).clustering;
    case Method::Exact: return exact_ilp(h, beta, budget).clustering;
    case Method::Minority: return minority_vote(h, ties);
    case Method::Majority: return majority_vote(h, ties);
  }
  throw InputError("unknown method");
}

void DynamicsConfig::validate() const {
  if (window < 1) throw InputError("window must be >= 1");
  if (horizon < 1) throw InputError("horizon must be >= 1");
  if (!(beta >= 0.0)) throw InputError("beta must be >= 0");
}

HistoryWindow::HistoryWindow(const LabeledHypergraph& initial, std::size_t capacity)
    : num_nodes_(initial.num_nodes()), colors_(initial.colors()), capacity_(capacity) {
  if (capacity_ < 1) throw InputError("window must be >= 1");
  slots_.resize(capacity_);
  const auto& edges = initial.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) slots_[i % capacity_].push_back(edges[i]);
}

LabeledHypergraph HistoryWindow::hypergraph() const {
  std::vector<Hyperedge> edges;
  for (const auto& slot : slots_) edges.insert(edges.end(), slot.begin(), slot.end());
  return LabeledHypergraph(num_nodes_, colors_, std::move(edges));
}

void HistoryWindow::push(std::vector<Hyperedge> step_edges) {
  slots_.push_back(std::move(step_edges));
  while (slots_.size() > capacity_) slots_.pop_front();
}

std::vector<Hyperedge> clusters_to_edges(const Clustering& c, std::size_t num_colors) {
  std::vector<Hyperedge> edges(num_colors);
  for (ColorId i = 0; i < num_colors; ++i) edges[i].color = i;
  for (NodeId v = 0; v < c.size(); ++v) edges[c[v]].nodes.push_back(v);
  std::erase_if(edges, [](const Hyperedge& e) { return e.nodes.empty(); });
  return edges;
}

StepOutcome step(HistoryWindow& window, const DynamicsConfig& cfg, TieBreaker& ties) {
  StepOutcome out;
  out.clustered = window.hypergraph();
  out.clustering =
      cluster_with(out.clustered, cfg.method, cfg.beta, ties, cfg.budget, cfg.tolerances);
  out.breakdown = drcec_objective(out.clustered, out.clustering, cfg.beta);
  window.push(clusters_to_edges(out.clustering, out.clustered.num_colors()));
  return out;
}

DynamicsTrace run(const LabeledHypergraph& initial, const DynamicsConfig& cfg) {
  cfg.validate();
  if (initial.num_colors() == 0) throw InputError("hypergraph has no colors to assign");

  HistoryWindow window(initial, cfg.window);
  auto ties = TieBreaker::seeded(cfg.seed);
  DynamicsTrace trace;
  trace.num_nodes = initial.num_nodes();
  trace.num_colors = initial.num_colors();

  std::optional<Clustering> previous;
  for (std::size_t s = 0; s < cfg.warm_steps(); ++s) {
    previous = step(window, cfg, ties).clustering;
  }

  std::vector<int> counts(trace.num_nodes * trace.num_colors, 0);
  for (std::size_t t = 0; t < cfg.horizon; ++t) {
    StepOutcome o = step(window, cfg, ties);
    DynamicsStep rec;
    rec.exchanged.assign(trace.num_nodes, 0);
    for (NodeId v = 0; v < trace.num_nodes; ++v) {
      if (previous && (*previous)[v] != o.clustering[v]) {
        rec.exchanged[v] = 1;
        ++rec.exchanges;
      }
      ++counts[static_cast<std::size_t>(v) * trace.num_colors + o.clustering[v]];
    }
    rec.window_degrees.reserve(trace.num_nodes * trace.num_colors);
    for (NodeId v = 0; v < trace.num_nodes; ++v) {
      const auto row = o.clustered.color_degrees(v);
      rec.window_degrees.insert(rec.window_degrees.end(), row.begin(), row.end());
    }
    rec.breakdown = o.breakdown;
    rec.clustering = o.clustering;
    previous = std::move(o.clustering);
    trace.steps.push_back(std::move(rec));
    trace.counts.push_back(counts);
  }
  return trace;
}

std::vector<double> uniformity_gap(const DynamicsTrace& trace, std::size_t t) {
  if (t < 1 || t > trace.horizon()) throw InputError("step index out of range");
  std::vector<double> gaps(trace.num_nodes, 0.0);
  for (NodeId v = 0; v < trace.num_nodes; ++v) {
    int lo = trace.count(t, v, 0);
    int hi = lo;
    for (ColorId c = 1; c < trace.num_colors; ++c) {
      lo = std::min(lo, trace.count(t, v, c));
      hi = std::max(hi, trace.count(t, v, c));
    }
    gaps[v] = static_cast<double>(hi - lo) / static_cast<double>(t);
  }
  return gaps;
}

double mean_uniformity_gap(const DynamicsTrace& trace, std::size_t t) {
  const auto gaps = uniformity_gap(trace, t);
  if (gaps.empty()) return 0.0;
  double sum = 0.0;
  for (double g : gaps) sum += g;
  return sum / static_cast<double>(gaps.size());
}

double mean_exchanges(const DynamicsTrace& trace) {
  if (trace.horizon() < 2) throw InputError("mean exchanges needs at least two steps");
  if (trace.num_nodes == 0) return 0.0;
  std::size_t total = 0;
  for (std::size_t t = 1; t < trace.horizon(); ++t) total += trace.steps[t].exchanges;
  return static_cast<double>(total) /
         (static_cast<double>(trace.num_nodes) * static_cast<double>(trace.horizon() - 1));
}

}  // namespace drcec
