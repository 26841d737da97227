// drcec: command-line front end over the C API.
//
// Data goes to stdout (or --out), diagnostics to stderr. Exit codes:
// 0 ok, 2 input error, 3 enumeration budget exceeded, 4 numerical failure.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "drcec/drcec.h"

namespace {

struct HypergraphDeleter {
  void operator()(drcec_hypergraph* h) const { drcec_hypergraph_free(h); }
};
struct TraceDeleter {
  void operator()(drcec_trace* t) const { drcec_trace_free(t); }
};
struct StringDeleter {
  void operator()(char* s) const { drcec_string_free(s); }
};
using HypergraphPtr = std::unique_ptr<drcec_hypergraph, HypergraphDeleter>;
using TracePtr = std::unique_ptr<drcec_trace, TraceDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

class Failure {
 public:
  Failure(int code, std::string message) : code_(code), message_(std::move(message)) {}
  int code() const { return code_; }
  const std::string& message() const { return message_; }

 private:
  int code_;
  std::string message_;
};

void check(drcec_status s) {
  if (s != DRCEC_OK) throw Failure(static_cast<int>(s), drcec_last_error());
}

// Locale-independent, 9 significant digits.
std::string num(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
  return std::string(buf, ptr);
}

const char* flag(int b) { return b ? "true" : "false"; }

HypergraphPtr load(const std::string& path) {
  drcec_hypergraph* h = nullptr;
  check(drcec_hypergraph_load(path.c_str(), &h));
  return HypergraphPtr(h);
}

drcec_method method_named(const std::string& name) {
  drcec_method m{};
  check(drcec_method_from_name(name.c_str(), &m));
  return m;
}

// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw Failure(DRCEC_ERR_INPUT, "cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure(DRCEC_ERR_INPUT, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_grid(const std::string& text) {
  double a = 0, b = 0, step = 0;
  char c1 = 0, c2 = 0;
  std::istringstream in(text);
  in.imbue(std::locale::classic());
  if (!(in >> a >> c1 >> b >> c2 >> step) || c1 != ':' || c2 != ':' || !in.eof()) {
    throw Failure(DRCEC_ERR_INPUT, "grid must look like a:b:step");
  }
  if (!(a >= 0) || !(b >= a) || !(step > 0)) {
    throw Failure(DRCEC_ERR_INPUT, "grid needs 0 <= a <= b and step > 0");
  }
  std::vector<double> out;
  for (std::size_t i = 0;; ++i) {
    const double beta = a + static_cast<double>(i) * step;
    if (beta > b + 1e-9 * step) break;
    out.push_back(beta);
  }
  return out;
}

struct CommonOptions {
  std::string input;
  std::string out;
  std::size_t node_cap = 0;
  std::uint64_t max_evals = 0;
};

void add_budget(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--node-cap", o.node_cap, "Node limit for the exact oracle (default 12)");
  cmd->add_option("--max-evals", o.max_evals, "Evaluation budget for the exact oracle (default 2^24)");
}

int cmd_cluster(const CommonOptions& o, const std::string& method_name, double beta,
                std::optional<std::uint64_t> seed, const std::string& dump_lp) {
  auto h = load(o.input);
  const drcec_method method = method_named(method_name);
  drcec_cluster_options opts;
  drcec_cluster_options_init(&opts);
  opts.beta = beta;
  opts.randomized_ties = seed.has_value();
  opts.seed = seed.value_or(0);
  opts.node_cap = o.node_cap;
  opts.max_evaluations = o.max_evals;

  if (!dump_lp.empty()) {
    char* text = nullptr;
    check(drcec_dump_lp(h.get(), beta, &text));
    StringPtr owned(text);
    std::ofstream f(dump_lp);
    if (!f) throw Failure(DRCEC_ERR_INPUT, "cannot write '" + dump_lp + "'");
    f << text;
  }

  std::vector<uint32_t> assignment(drcec_hypergraph_num_nodes(h.get()));
  drcec_objective obj{};
  double lp_value = NAN;
  check(drcec_cluster(h.get(), method, &opts, assignment.data(), &obj, &lp_value));

  char* text = nullptr;
  check(drcec_format_clustering(h.get(), assignment.data(), &text));
  StringPtr owned(text);
  Output out(o.out);
  out.stream() << text;

  std::cerr << "method=" << method_name << " beta=" << num(beta) << " edge_cost=" << obj.edge_cost
            << " experience_penalty=" << obj.experience_penalty << " total=" << num(obj.total);
  if (!std::isnan(lp_value)) std::cerr << " lp_value=" << num(lp_value);
  std::cerr << "\n";
  return 0;
}

int cmd_sweep(const CommonOptions& o, const std::string& grid) {
  const auto betas = parse_grid(grid);
  auto h = load(o.input);
  const std::size_t n = drcec_hypergraph_num_nodes(h.get());
  const bool has_edges = drcec_hypergraph_num_edges(h.get()) > 0;

  Output out(o.out);
  auto& os = out.stream();
  os << "beta,lp_value,rounded_total,exact_total,approx_ratio,edge_satisfaction,f_within,"
        "experience_penalty,exchanges_na\n";
  bool exact_allowed = true;
  std::vector<uint32_t> rounded(n), exact(n);
  for (double beta : betas) {
    drcec_cluster_options opts;
    drcec_cluster_options_init(&opts);
    opts.beta = beta;
    opts.node_cap = o.node_cap;
    opts.max_evaluations = o.max_evals;

    drcec_objective r{};
    double lp_value = NAN;
    check(drcec_cluster(h.get(), DRCEC_METHOD_LP_ROUND, &opts, rounded.data(), &r, &lp_value));

    double exact_total = NAN;
    if (exact_allowed) {
      drcec_objective e{};
      const drcec_status s =
          drcec_cluster(h.get(), DRCEC_METHOD_EXACT, &opts, exact.data(), &e, nullptr);
      if (s == DRCEC_ERR_BUDGET) {
        std::cerr << "exact_total omitted: " << drcec_last_error() << "\n";
        exact_allowed = false;
      } else {
        check(s);
        exact_total = e.total;
      }
    }
    double ratio = NAN;
    if (!std::isnan(exact_total)) {
      if (exact_total > 0) {
        ratio = r.total / exact_total;
      } else if (r.total == 0) {
        ratio = 1.0;
      }
    }
    drcec_clustering_metrics m{};
    check(drcec_metrics(h.get(), rounded.data(), &m));
    os << num(beta) << ',' << num(lp_value) << ',' << num(r.total) << ',' << num(exact_total)
       << ',' << num(ratio) << ',' << (has_edges ? num(m.edge_satisfaction) : "") << ','
       << num(m.f_within) << ',' << r.experience_penalty << ",NA\n";
  }
  return 0;
}

int cmd_beta_hat(const CommonOptions& o, std::optional<double> beta0, bool csv) {
  auto h = load(o.input);
  drcec_beta_hat_result r{};
  check(drcec_beta_hat(h.get(), beta0.value_or(NAN), &r));
  Output out(o.out);
  auto& os = out.stream();
  const std::vector<std::pair<const char*, std::string>> fields = {
      {"beta0", num(r.beta0)},
      {"theta_plus", num(r.theta_plus)},
      {"beta_hat", num(r.beta_hat)},
      {"clamped", flag(r.clamped)},
      {"unique_minority", flag(r.unique_minority)},
      {"epsilon", num(r.epsilon)},
      {"above_residual", num(r.above_residual)},
      {"below_drop", std::isnan(r.below_drop) ? "NA" : num(r.below_drop)},
      {"aux_dual_residual", num(r.aux_dual_residual)},
      {"aux_equality_residual", num(r.aux_equality_residual)},
      {"verified", flag(r.verified)},
  };
  if (csv) {
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i].first;
    os << "\n";
    for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << fields[i].second;
    os << "\n";
  } else {
    for (const auto& [k, v] : fields) os << k << '=' << v << "\n";
  }
  if (!r.verified) std::cerr << "warning: re-solve verification did not pass\n";
  return 0;
}

struct DynamicsOptions {
  double beta = 0.0;
  std::size_t window = 1;
  std::size_t steps = 1;
  long warm_start = -1;
  std::uint64_t seed = 0;
  std::string method = "lp-round";
  std::string assignments;
};

int cmd_dynamics(const CommonOptions& o, const DynamicsOptions& d) {
  auto h = load(o.input);
  drcec_dynamics_config cfg;
  drcec_dynamics_config_init(&cfg);
  cfg.beta = d.beta;
  cfg.window = d.window;
  cfg.steps = d.steps;
  cfg.warm_start = d.warm_start;
  cfg.method = method_named(d.method);
  cfg.seed = d.seed;
  cfg.node_cap = o.node_cap;
  cfg.max_evaluations = o.max_evals;

  drcec_trace* raw = nullptr;
  check(drcec_dynamics_run(h.get(), &cfg, &raw));
  TracePtr trace(raw);

  Output out(o.out);
  auto& os = out.stream();
  os << "t,exchanges,edge_cost,experience_penalty,mean_uniformity_gap\n";
  const std::size_t steps = drcec_trace_num_steps(trace.get());
  for (std::size_t t = 1; t <= steps; ++t) {
    drcec_step_info s{};
    check(drcec_trace_step(trace.get(), t, &s));
    os << t << ',' << s.exchanges << ',' << s.edge_cost << ',' << s.experience_penalty << ','
       << num(s.mean_uniformity_gap) << "\n";
  }

  if (!d.assignments.empty()) {
    std::ofstream f(d.assignments);
    if (!f) throw Failure(DRCEC_ERR_INPUT, "cannot write '" + d.assignments + "'");
    const std::size_t n = drcec_hypergraph_num_nodes(h.get());
    f << "t";
    for (std::size_t v = 0; v < n; ++v) f << ',' << v;
    f << "\n";
    std::vector<uint32_t> a(n);
    for (std::size_t t = 1; t <= steps; ++t) {
      check(drcec_trace_assignment(trace.get(), t, a.data()));
      f << t;
      for (uint32_t c : a) f << ',' << drcec_hypergraph_color_name(h.get(), c);
      f << "\n";
    }
  }
  if (steps >= 2) {
    double mean = 0;
    check(drcec_trace_mean_exchanges(trace.get(), &mean));
    std::cerr << "mean_exchanges=" << num(mean) << "\n";
  }
  return 0;
}

int cmd_stats(const CommonOptions& o, const std::string& assignment_path) {
  auto h = load(o.input);
  const std::string text = read_file(assignment_path);
  std::vector<uint32_t> a(drcec_hypergraph_num_nodes(h.get()));
  check(drcec_parse_clustering(h.get(), text.data(), text.size(), a.data()));

  drcec_clustering_metrics m{};
  check(drcec_metrics(h.get(), a.data(), &m));
  Output out(o.out);
  auto& os = out.stream();
  os << "color,size,diversity,experience,homogeneity,f_within,f_within_normalized,"
        "edge_satisfaction\n";
  for (std::size_t c = 0; c < drcec_hypergraph_num_colors(h.get()); ++c) {
    drcec_color_stats s{};
    check(drcec_color_statistics(h.get(), a.data(), c, &s));
    os << drcec_hypergraph_color_name(h.get(), c) << ',' << s.size << ',' << s.diversity << ','
       << s.experience << ',' << num(s.homogeneity) << ',' << num(m.f_within) << ','
       << num(m.f_within_normalized) << ',' << num(m.edge_satisfaction) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diversity-regularized categorical edge clustering"};
  app.require_subcommand(1);
  CommonOptions common;

  auto* cluster = app.add_subcommand("cluster", "Cluster a hypergraph");
  std::string method = "lp-round";
  double beta = 0.0;
  std::optional<std::uint64_t> seed;
  std::string dump_lp;
  cluster->add_option("input", common.input, "Hypergraph file")->required();
  cluster->add_option("--method", method, "lp-round | exact | minority | majority");
  cluster->add_option("--beta", beta, "Regularization weight")->check(CLI::NonNegativeNumber);
  cluster->add_option("--seed", seed, "Break ties at random with this seed");
  cluster->add_option("--dump-lp", dump_lp, "Write the LP as triplets to this file");
  cluster->add_option("--out", common.out, "Output file (default stdout)");
  add_budget(cluster, common);

  auto* sweep = app.add_subcommand("sweep", "Evaluate LP rounding over a grid of beta values");
  std::string grid;
  sweep->add_option("input", common.input, "Hypergraph file")->required();
  sweep->add_option("--betas", grid, "Grid a:b:step")->required();
  sweep->add_option("--out", common.out, "Output file (default stdout)");
  add_budget(sweep, common);

  auto* bh = app.add_subcommand("beta-hat", "Smallest beta keeping the relaxed minority vote optimal");
  std::optional<double> beta0;
  bool csv = false;
  bh->add_option("input", common.input, "Hypergraph file")->required();
  bh->add_option("--beta0", beta0, "Pivot weight (default d_max + 1)")->check(CLI::PositiveNumber);
  bh->add_flag("--csv", csv, "Emit CSV instead of key=value lines");
  bh->add_option("--out", common.out, "Output file (default stdout)");

  auto* dyn = app.add_subcommand("dynamics", "Run the iterated group-formation process");
  DynamicsOptions d;
  dyn->add_option("input", common.input, "Hypergraph file")->required();
  dyn->add_option("--beta", d.beta, "Regularization weight")->check(CLI::NonNegativeNumber);
  dyn->add_option("--window", d.window, "History window in steps")->check(CLI::PositiveNumber);
  dyn->add_option("--steps", d.steps, "Recorded steps")->check(CLI::PositiveNumber);
  dyn->add_option("--warm-start", d.warm_start, "Unrecorded steps first (default: window)")
      ->check(CLI::NonNegativeNumber);
  dyn->add_option("--seed", d.seed, "Tie-breaking seed");
  dyn->add_option("--method", d.method, "lp-round | exact | minority | majority");
  dyn->add_option("--assignments", d.assignments, "Write the per-step assignment matrix here");
  dyn->add_option("--out", common.out, "Output file (default stdout)");
  add_budget(dyn, common);

  auto* stats = app.add_subcommand("stats", "Diversity and experience statistics of a clustering");
  std::string assignment_path;
  stats->add_option("input", common.input, "Hypergraph file")->required();
  stats->add_option("--assignment", assignment_path, "Clustering file")->required();
  stats->add_option("--out", common.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(DRCEC_ERR_INPUT);
  }

  try {
    if (cluster->parsed()) return cmd_cluster(common, method, beta, seed, dump_lp);
    if (sweep->parsed()) return cmd_sweep(common, grid);
    if (bh->parsed()) return cmd_beta_hat(common, beta0, csv);
    if (dyn->parsed()) return cmd_dynamics(common, d);
    if (stats->parsed()) return cmd_stats(common, assignment_path);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message() << "\n";
    return f.code();
  }
  return 0;
}
