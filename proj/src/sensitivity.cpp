#include "drcec/sensitivity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "drcec/error.hpp"
#include "drcec/vote.hpp"

namespace drcec {

LpProblem build_aux_lp(const LpProblem& p, std::span<const double> direction,
                       std::span<const double> x0, double theta_cap) {
  p.validate();
  if (direction.size() != p.num_vars || x0.size() != p.num_vars) {
    throw InputError("direction and x0 must have one entry per LP column");
  }
  if (!(theta_cap >= 0.0)) throw InputError("theta cap must be non-negative");
  for (const auto& r : p.rows) {
    if (r.sense != RowSense::GreaterEqual) {
      throw InputError("auxiliary LP needs an all-(>=) primal; split equalities first");
    }
  }

  const std::size_t m = p.num_rows();
  const std::size_t theta = m;
  LpProblem aux;
  aux.num_vars = m + 1;
  aux.cost.assign(aux.num_vars, 0.0);
  aux.cost[theta] = -1.0;

  // A^T y + theta * direction <= c, written as a >= row.
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    LpRow r{std::vector<double>(aux.num_vars, 0.0), RowSense::GreaterEqual, -p.cost[j]};
    for (std::size_t i = 0; i < m; ++i) r.coeffs[i] = -p.rows[i].coeffs[j];
    r.coeffs[theta] = -direction[j];
    aux.rows.push_back(std::move(r));
  }

  double cx0 = 0.0;
  double dx0 = 0.0;
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    cx0 += p.cost[j] * x0[j];
    dx0 += direction[j] * x0[j];
  }
  LpRow eq{std::vector<double>(aux.num_vars, 0.0), RowSense::Equal, cx0};
  for (std::size_t i = 0; i < m; ++i) eq.coeffs[i] = p.rows[i].rhs;
  eq.coeffs[theta] = dx0;
  aux.rows.push_back(std::move(eq));

  LpRow cap{std::vector<double>(aux.num_vars, 0.0), RowSense::GreaterEqual, -theta_cap};
  cap.coeffs[theta] = -1.0;
  aux.rows.push_back(std::move(cap));
  return aux;
}

AuxCertificate certify_aux(const LpProblem& p, std::span<const double> direction,
                           std::span<const double> x0, std::span<const double> y,
                           double theta) {
  AuxCertificate cert;
  double bty = 0.0;
  for (std::size_t i = 0; i < p.num_rows(); ++i) bty += p.rows[i].rhs * y[i];
  double ctx = 0.0;
  for (std::size_t j = 0; j < p.num_vars; ++j) {
    const double cj = p.cost[j] - theta * direction[j];
    double aty = 0.0;
    for (std::size_t i = 0; i < p.num_rows(); ++i) aty += p.rows[i].coeffs[j] * y[i];
    cert.dual_residual = std::max(cert.dual_residual, aty - cj);
    ctx += cj * x0[j];
  }
  cert.equality_residual = std::abs(bty - ctx);
  return cert;
}

namespace {

struct ThetaSearch {
  double theta = 0.0;
  bool capped = false;
  AuxCertificate certificate;
};

ThetaSearch max_theta(const LpProblem& p, std::span<const double> direction,
                      std::span<const double> x0, double cap, const LpTolerances& tol) {
  const LpProblem aux = build_aux_lp(p, direction, x0, cap);
  const LpSolution s = solve(aux, tol);
  if (s.status != LpStatus::Optimal) {
    throw NumericalFailure(std::string("auxiliary LP is ") + to_string(s.status) +
                           "; the reference solution is not optimal at the pivot weight");
  }
  const auto kkt = check_kkt(aux, s);
  if (!kkt.passes(tol)) {
    throw NumericalFailure("auxiliary LP failed KKT certification: " + describe(kkt));
  }
  ThetaSearch out;
  out.theta = std::clamp(s.x[p.num_rows()], 0.0, cap);
  out.capped = out.theta >= cap - 1e-9;
  if (out.capped) out.theta = cap;
  const std::span<const double> y(s.x.data(), p.num_rows());
  out.certificate = certify_aux(p, direction, x0, y, out.theta);
  return out;
}

}  // namespace

StabilityResult beta_hat(const LabeledHypergraph& h, std::optional<double> beta0,
                         const LpTolerances& tol) {
  const DrcecEncoding enc(h);
  StabilityResult out;
  out.beta0 = beta0.value_or(static_cast<double>(h.d_max()) + 1.0);
  if (!(out.beta0 >= 0.0) || !std::isfinite(out.beta0)) {
    throw InputError("beta0 must be finite and >= 0");
  }
  out.unique_minority = minority_vote_unique(h);

  const RelaxedSolution at_pivot = solve_relaxation(h, enc, out.beta0, tol);
  out.x0 = at_pivot.x;
  const LpProblem p = enc.problem(h, out.beta0);
  const auto search = max_theta(p, enc.diversity_costs(), out.x0, out.beta0, tol);
  out.theta_plus = search.theta;
  out.clamped = search.capped;
  out.certificate = search.certificate;
  out.beta_hat = out.clamped ? 0.0 : std::max(0.0, out.beta0 - out.theta_plus);

  out.epsilon = std::max(1e-6, 1e-4 * out.beta0);
  const double above = out.beta_hat + out.epsilon;
  out.above_residual = std::abs(solve_relaxation(h, enc, above, tol).objective_with_offset -
                                enc.objective_with_offset(out.x0, above));
  if (out.beta_hat >= out.epsilon) {
    const double below = out.beta_hat - out.epsilon;
    out.below_checked = true;
    out.below_drop = enc.objective_with_offset(out.x0, below) -
                     solve_relaxation(h, enc, below, tol).objective_with_offset;
  }
  return out;
}

StabilityInterval stability_interval(const LabeledHypergraph& h, double beta,
                                     const LpTolerances& tol) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw InputError("beta must be finite and >= 0");
  const DrcecEncoding enc(h);
  StabilityInterval out;
  out.beta = beta;
  out.x = solve_relaxation(h, enc, beta, tol).x;
  const LpProblem p = enc.problem(h, beta);

  const auto down = max_theta(p, enc.diversity_costs(), out.x, beta, tol);
  out.lo_clamped = down.capped;
  out.beta_lo = out.lo_clamped ? 0.0 : beta - down.theta;

  // Past d_max every optimum is a relaxed minority vote with the same
  // regularizer mass, so a solution still optimal at max(d_max + 1, beta) + 1
  // stays optimal for every larger beta.
  std::vector<double> up_dir(enc.diversity_costs());
  for (double& d : up_dir) d = -d;
  const double up_cap = std::max(static_cast<double>(h.d_max()) + 1.0, beta) + 1.0 - beta;
  const auto up = max_theta(p, up_dir, out.x, up_cap, tol);
  out.hi_unbounded = up.capped;
  out.beta_hi = out.hi_unbounded ? std::numeric_limits<double>::infinity() : beta + up.theta;
  return out;
}

}  // namespace drcec
