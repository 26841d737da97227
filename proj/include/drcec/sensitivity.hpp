#pragma once

#include <optional>
#include <span>
#include <vector>

#include "drcec/hypergraph.hpp"
#include "drcec/lp_encode.hpp"
#include "drcec/simplex.hpp"

namespace drcec {

/// Auxiliary LP over (y, theta) that finds the largest theta for which `x0`
/// stays optimal when the cost moves to c - theta * direction:
///
///   max theta  s.t.  A^T y <= c - theta * direction,
///                    b^T y  = c^T x0 - theta * direction^T x0,
///                    0 <= theta <= theta_cap,  y >= 0.
///
/// Emitted as a minimization of -theta; variable order is (y_0..y_{m-1}, theta).
/// `p` must consist of GreaterEqual rows only.
LpProblem build_aux_lp(const LpProblem& p, std::span<const double> direction,
                       std::span<const double> x0, double theta_cap);

struct AuxCertificate {
  double dual_residual = 0.0;      // max over columns of (A^T y - c(theta))_+
  double equality_residual = 0.0;  // |b^T y - c(theta)^T x0|
};

/// Checks (y*, theta*) against the primal-dual optimality conditions of the
/// perturbed LP at x0.
AuxCertificate certify_aux(const LpProblem& p, std::span<const double> direction,
                           std::span<const double> x0, std::span<const double> y,
                           double theta);

struct StabilityResult {
  double beta0 = 0.0;
  std::vector<double> x0;
  double theta_plus = 0.0;
  double beta_hat = 0.0;
  bool clamped = false;          // theta+ reached beta0, so x0 is optimal down to 0
  bool unique_minority = false;  // every node has a single least-experienced color
  AuxCertificate certificate;

  double epsilon = 0.0;
  /// |LP(beta_hat + eps) - cost of x0 at beta_hat + eps|.
  double above_residual = 0.0;
  /// cost of x0 at beta_hat - eps minus LP(beta_hat - eps); only meaningful
  /// when below_checked.
  double below_drop = 0.0;
  bool below_checked = false;

  bool verified(double above_tol = 1e-5, double drop_tol = 1e-7) const {
    return above_residual <= above_tol && (!below_checked || below_drop > drop_tol);
  }
};

/// Smallest beta for which the relaxed solution at beta0 stays LP-optimal.
/// The default beta0 is d_max + 1. Throws NumericalFailure if the auxiliary
/// LP is infeasible or the solver fails certification.
StabilityResult beta_hat(const LabeledHypergraph& h, std::optional<double> beta0 = std::nullopt,
                         const LpTolerances& tol = {});

struct StabilityInterval {
  double beta = 0.0;
  double beta_lo = 0.0;
  double beta_hi = 0.0;  // +infinity when the solution stays optimal forever
  bool lo_clamped = false;
  bool hi_unbounded = false;
  std::vector<double> x;
};

/// Range of beta over which the LP solution found at `beta` remains optimal.
StabilityInterval stability_interval(const LabeledHypergraph& h, double beta,
                                     const LpTolerances& tol = {});

}  // namespace drcec
