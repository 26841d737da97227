#include "drcec/metrics.hpp"

#include "drcec/error.hpp"

namespace drcec {

std::vector<ColorScores> diversity_experience_scores(const LabeledHypergraph& h,
                                                     const Clustering& c) {
  std::vector<ColorScores> scores(h.num_colors());
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    const ColorId i = c[v];
    const int own = h.color_degree(v, i);
    scores[i].experience += own;
    scores[i].diversity += h.degree(v) - own;
  }
  return scores;
}

double naive_objective(const LabeledHypergraph& h, const Clustering& c, double beta) {
  double total = 0.0;
  for (const auto& s : diversity_experience_scores(h, c)) {
    total += static_cast<double>(s.experience) + beta * static_cast<double>(s.diversity);
  }
  return total;
}

bool edge_satisfied(const Hyperedge& e, const Clustering& c) {
  for (NodeId v : e.nodes) {
    if (c[v] != e.color) return false;
  }
  return true;
}

ObjectiveBreakdown drcec_objective(const LabeledHypergraph& h, const Clustering& c,
                                   double beta) {
  ObjectiveBreakdown out;
  out.beta = beta;
  for (const auto& e : h.edges()) {
    if (!edge_satisfied(e, c)) ++out.edge_cost;
  }
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    out.experience_penalty += static_cast<std::size_t>(h.color_degree(v, c[v]));
  }
  return out;
}

double edge_satisfaction(const LabeledHypergraph& h, const Clustering& c) {
  if (h.num_edges() == 0) throw InputError("edge satisfaction undefined without edges");
  const auto b = drcec_objective(h, c, 0.0);
  return 1.0 - static_cast<double>(b.edge_cost) / static_cast<double>(h.num_edges());
}

std::vector<std::size_t> cluster_sizes(const LabeledHypergraph& h, const Clustering& c) {
  std::vector<std::size_t> sizes(h.num_colors(), 0);
  for (ColorId i : c.assignment) ++sizes[i];
  return sizes;
}

namespace {

struct RatioSum {
  double sum = 0.0;
  std::size_t counted = 0;
};

std::vector<RatioSum> ratio_sums(const LabeledHypergraph& h, const Clustering& c) {
  std::vector<RatioSum> out(h.num_colors());
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    const int d = h.degree(v);
    if (d == 0) continue;
    const ColorId i = c[v];
    out[i].sum += static_cast<double>(h.color_degree(v, i)) / d;
    ++out[i].counted;
  }
  return out;
}

}  // namespace

double f_within(const LabeledHypergraph& h, const Clustering& c) {
  if (h.num_nodes() == 0) return 0.0;
  const auto sizes = cluster_sizes(h, c);
  const auto sums = ratio_sums(h, c);
  double total = 0.0;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    total += static_cast<double>(sizes[i]) / static_cast<double>(h.num_nodes()) * sums[i].sum;
  }
  return total;
}

double f_within_normalized(const LabeledHypergraph& h, const Clustering& c) {
  if (h.num_nodes() == 0) return 0.0;
  const auto sizes = cluster_sizes(h, c);
  const auto sums = ratio_sums(h, c);
  double total = 0.0;
  for (std::size_t i = 0; i < sums.size(); ++i) {
    if (sums[i].counted == 0) continue;
    total += static_cast<double>(sizes[i]) / static_cast<double>(h.num_nodes()) *
             (sums[i].sum / static_cast<double>(sums[i].counted));
  }
  return total;
}

double experience_homogeneity(const LabeledHypergraph& h, const Clustering& c, ColorId i) {
  if (i >= h.num_colors()) throw InputError("unknown color index");
  double total = 0.0;
  for (NodeId v = 0; v < h.num_nodes(); ++v) {
    if (c[v] != i || h.degree(v) == 0) continue;
    total += static_cast<double>(h.color_degree(v, i)) / h.degree(v);
  }
  return total;
}

}  // namespace drcec
