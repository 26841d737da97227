#include "drcec/drcec.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <optional>
#include <string>

#include "drcec/dynamics.hpp"
#include "drcec/error.hpp"
#include "drcec/hypergraph.hpp"
#include "drcec/lp_encode.hpp"
#include "drcec/metrics.hpp"
#include "drcec/sensitivity.hpp"
#include "drcec/vote.hpp"

struct drcec_hypergraph {
  drcec::LabeledHypergraph graph;
};

struct drcec_trace {
  drcec::DynamicsTrace trace;
};

namespace {

thread_local std::string last_error;

template <class F>
drcec_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return DRCEC_OK;
  } catch (const drcec::Error& e) {
    last_error = e.what();
    return static_cast<drcec_status>(static_cast<int>(e.kind()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return DRCEC_ERR_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw drcec::InputError(std::string(what) + " must not be null");
}

drcec::Method to_method(drcec_method m) {
  switch (m) {
    case DRCEC_METHOD_LP_ROUND: return drcec::Method::LpRound;
    case DRCEC_METHOD_EXACT: return drcec::Method::Exact;
    case DRCEC_METHOD_MINORITY: return drcec::Method::Minority;
    case DRCEC_METHOD_MAJORITY: return drcec::Method::Majority;
  }
  throw drcec::InputError("unknown method");
}

drcec::Clustering read_assignment(const drcec::LabeledHypergraph& g, const uint32_t* a) {
  require(a, "assignment");
  drcec::Clustering c{std::vector<drcec::ColorId>(a, a + g.num_nodes())};
  drcec::validate_clustering(g, c);
  return c;
}

void write_assignment(const drcec::Clustering& c, uint32_t* out) {
  std::copy(c.assignment.begin(), c.assignment.end(), out);
}

drcec_objective to_c(const drcec::ObjectiveBreakdown& b) {
  return {b.edge_cost, b.experience_penalty, b.beta, b.total()};
}

drcec::EnumerationBudget budget_from(size_t node_cap, uint64_t max_evaluations) {
  drcec::EnumerationBudget b;
  if (node_cap != 0) b.node_cap = node_cap;
  if (max_evaluations != 0) b.max_evaluations = max_evaluations;
  return b;
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* drcec_last_error(void) { return last_error.c_str(); }

const char* drcec_version(void) { return "1.0.0"; }

void drcec_cluster_options_init(drcec_cluster_options* opts) {
  if (opts == nullptr) return;
  *opts = drcec_cluster_options{};
}

void drcec_dynamics_config_init(drcec_dynamics_config* cfg) {
  if (cfg == nullptr) return;
  *cfg = drcec_dynamics_config{};
  cfg->window = 1;
  cfg->steps = 1;
  cfg->warm_start = -1;
  cfg->method = DRCEC_METHOD_LP_ROUND;
}

drcec_status drcec_method_from_name(const char* name, drcec_method* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    switch (drcec::parse_method(name)) {
      case drcec::Method::LpRound: *out = DRCEC_METHOD_LP_ROUND; break;
      case drcec::Method::Exact: *out = DRCEC_METHOD_EXACT; break;
      case drcec::Method::Minority: *out = DRCEC_METHOD_MINORITY; break;
      case drcec::Method::Majority: *out = DRCEC_METHOD_MAJORITY; break;
    }
  });
}

drcec_status drcec_hypergraph_parse(const char* text, size_t len, drcec_hypergraph** out) {
  return guarded([&] {
    require(out, "out");
    if (len > 0) require(text, "text");
    *out = new drcec_hypergraph{drcec::parse_hypergraph(std::string_view(text, len))};
  });
}

drcec_status drcec_hypergraph_load(const char* path, drcec_hypergraph** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new drcec_hypergraph{drcec::load_hypergraph(path)};
  });
}

void drcec_hypergraph_free(drcec_hypergraph* h) { delete h; }

size_t drcec_hypergraph_num_nodes(const drcec_hypergraph* h) {
  return h ? h->graph.num_nodes() : 0;
}

size_t drcec_hypergraph_num_colors(const drcec_hypergraph* h) {
  return h ? h->graph.num_colors() : 0;
}

size_t drcec_hypergraph_num_edges(const drcec_hypergraph* h) {
  return h ? h->graph.num_edges() : 0;
}

int drcec_hypergraph_d_max(const drcec_hypergraph* h) { return h ? h->graph.d_max() : 0; }

const char* drcec_hypergraph_color_name(const drcec_hypergraph* h, size_t color) {
  if (h == nullptr || color >= h->graph.num_colors()) return nullptr;
  return h->graph.color_name(static_cast<drcec::ColorId>(color)).c_str();
}

drcec_status drcec_hypergraph_color_degrees(const drcec_hypergraph* h, size_t node, int* out,
                                            size_t out_len) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    if (node >= h->graph.num_nodes()) throw drcec::InputError("node id out of range");
    if (out_len < h->graph.num_colors()) throw drcec::InputError("output buffer too small");
    const auto row = h->graph.color_degrees(static_cast<drcec::NodeId>(node));
    std::copy(row.begin(), row.end(), out);
  });
}

drcec_status drcec_cluster(const drcec_hypergraph* h, drcec_method method,
                           const drcec_cluster_options* opts, uint32_t* assignment,
                           drcec_objective* objective, double* lp_value) {
  return guarded([&] {
    require(h, "hypergraph");
    require(assignment, "assignment");
    drcec_cluster_options defaults;
    drcec_cluster_options_init(&defaults);
    const drcec_cluster_options& o = opts ? *opts : defaults;
    auto ties = o.randomized_ties ? drcec::TieBreaker::seeded(o.seed)
                                  : drcec::TieBreaker::deterministic();
    const auto& g = h->graph;
    drcec::Clustering c;
    if (lp_value) *lp_value = std::numeric_limits<double>::quiet_NaN();
    if (method == DRCEC_METHOD_LP_ROUND) {
      auto r = drcec::algorithm1(g, o.beta, ties);
      if (lp_value) *lp_value = r.relaxation.objective_with_offset;
      c = std::move(r.clustering);
    } else {
      if (!(o.beta >= 0.0)) throw drcec::InputError("beta must be >= 0");
      c = drcec::cluster_with(g, to_method(method), o.beta, ties,
                              budget_from(o.node_cap, o.max_evaluations));
    }
    write_assignment(c, assignment);
    if (objective) *objective = to_c(drcec::drcec_objective(g, c, o.beta));
  });
}

drcec_status drcec_evaluate(const drcec_hypergraph* h, const uint32_t* assignment, double beta,
                            drcec_objective* objective) {
  return guarded([&] {
    require(h, "hypergraph");
    require(objective, "objective");
    const auto c = read_assignment(h->graph, assignment);
    *objective = to_c(drcec::drcec_objective(h->graph, c, beta));
  });
}

drcec_status drcec_metrics(const drcec_hypergraph* h, const uint32_t* assignment,
                           drcec_clustering_metrics* out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    const auto& g = h->graph;
    const auto c = read_assignment(g, assignment);
    out->edge_satisfaction = g.num_edges() > 0 ? drcec::edge_satisfaction(g, c)
                                               : std::numeric_limits<double>::quiet_NaN();
    out->f_within = drcec::f_within(g, c);
    out->f_within_normalized = drcec::f_within_normalized(g, c);
  });
}

drcec_status drcec_color_statistics(const drcec_hypergraph* h, const uint32_t* assignment,
                                    size_t color, drcec_color_stats* out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    const auto& g = h->graph;
    if (color >= g.num_colors()) throw drcec::InputError("unknown color index");
    const auto c = read_assignment(g, assignment);
    const auto i = static_cast<drcec::ColorId>(color);
    const auto scores = drcec::diversity_experience_scores(g, c);
    out->size = drcec::cluster_sizes(g, c)[i];
    out->diversity = scores[i].diversity;
    out->experience = scores[i].experience;
    out->homogeneity = drcec::experience_homogeneity(g, c, i);
  });
}

drcec_status drcec_parse_clustering(const drcec_hypergraph* h, const char* text, size_t len,
                                    uint32_t* assignment) {
  return guarded([&] {
    require(h, "hypergraph");
    require(assignment, "assignment");
    if (len > 0) require(text, "text");
    write_assignment(drcec::parse_clustering(std::string_view(text, len), h->graph),
                     assignment);
  });
}

drcec_status drcec_format_clustering(const drcec_hypergraph* h, const uint32_t* assignment,
                                     char** out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    const auto c = read_assignment(h->graph, assignment);
    *out = copy_string(drcec::write_clustering(c, h->graph.colors()));
  });
}

drcec_status drcec_dump_lp(const drcec_hypergraph* h, double beta, char** out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    const drcec::DrcecEncoding enc(h->graph);
    *out = copy_string(drcec::dump_triplets(enc.problem(h->graph, beta)));
  });
}

void drcec_string_free(char* s) { std::free(s); }

drcec_status drcec_beta_hat(const drcec_hypergraph* h, double beta0,
                            drcec_beta_hat_result* out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    std::optional<double> pivot;
    if (std::isfinite(beta0) && beta0 > 0.0) pivot = beta0;
    const auto r = drcec::beta_hat(h->graph, pivot);
    out->beta0 = r.beta0;
    out->theta_plus = r.theta_plus;
    out->beta_hat = r.beta_hat;
    out->clamped = r.clamped;
    out->unique_minority = r.unique_minority;
    out->aux_dual_residual = r.certificate.dual_residual;
    out->aux_equality_residual = r.certificate.equality_residual;
    out->epsilon = r.epsilon;
    out->above_residual = r.above_residual;
    out->below_drop =
        r.below_checked ? r.below_drop : std::numeric_limits<double>::quiet_NaN();
    out->verified = r.verified();
  });
}

drcec_status drcec_stability_interval(const drcec_hypergraph* h, double beta,
                                      drcec_interval* out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(out, "out");
    const auto r = drcec::stability_interval(h->graph, beta);
    out->beta_lo = r.beta_lo;
    out->beta_hi = r.beta_hi;
    out->lo_clamped = r.lo_clamped;
    out->hi_unbounded = r.hi_unbounded;
  });
}

drcec_status drcec_dynamics_run(const drcec_hypergraph* h, const drcec_dynamics_config* cfg,
                                drcec_trace** out) {
  return guarded([&] {
    require(h, "hypergraph");
    require(cfg, "config");
    require(out, "out");
    drcec::DynamicsConfig c;
    c.beta = cfg->beta;
    c.window = cfg->window;
    c.horizon = cfg->steps;
    if (cfg->warm_start >= 0) c.warm_start = static_cast<std::size_t>(cfg->warm_start);
    c.method = to_method(cfg->method);
    c.seed = cfg->seed;
    c.budget = budget_from(cfg->node_cap, cfg->max_evaluations);
    *out = new drcec_trace{drcec::run(h->graph, c)};
  });
}

void drcec_trace_free(drcec_trace* t) { delete t; }

size_t drcec_trace_num_steps(const drcec_trace* t) { return t ? t->trace.horizon() : 0; }

drcec_status drcec_trace_step(const drcec_trace* t, size_t step, drcec_step_info* out) {
  return guarded([&] {
    require(t, "trace");
    require(out, "out");
    if (step < 1 || step > t->trace.horizon()) throw drcec::InputError("step out of range");
    const auto& s = t->trace.steps[step - 1];
    out->exchanges = s.exchanges;
    out->edge_cost = s.breakdown.edge_cost;
    out->experience_penalty = s.breakdown.experience_penalty;
    out->total = s.breakdown.total();
    out->mean_uniformity_gap = drcec::mean_uniformity_gap(t->trace, step);
  });
}

drcec_status drcec_trace_assignment(const drcec_trace* t, size_t step, uint32_t* assignment) {
  return guarded([&] {
    require(t, "trace");
    require(assignment, "assignment");
    if (step < 1 || step > t->trace.horizon()) throw drcec::InputError("step out of range");
    write_assignment(t->trace.steps[step - 1].clustering, assignment);
  });
}

drcec_status drcec_trace_mean_exchanges(const drcec_trace* t, double* out) {
  return guarded([&] {
    require(t, "trace");
    require(out, "out");
    *out = drcec::mean_exchanges(t->trace);
  });
}

}  // extern "C"
