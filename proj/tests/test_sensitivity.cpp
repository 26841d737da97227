#include <doctest.h>

#include "drcec/error.hpp"
#include "drcec/sensitivity.hpp"
#include "support.hpp"

using namespace drcec;

namespace {

double theta_of(const LpProblem& p, std::vector<double> dir, std::vector<double> x0, double cap) {
  const auto aux = build_aux_lp(p, dir, x0, cap);
  const auto s = solve(aux);
  REQUIRE(s.status == LpStatus::Optimal);
  return s.x.back();
}

// Largest grid point (step 1e-3) in [0, hi] where the LP value lies strictly
// below x0's cost; -1 when none does.
double last_gap_point(const LabeledHypergraph& h, const DrcecEncoding& enc,
                      const std::vector<double>& x0, double hi) {
  double last = -1;
  const long steps = std::lround(hi / 1e-3);
  for (long i = 0; i <= steps; ++i) {
    const double b = static_cast<double>(i) * 1e-3;
    const double lp = solve_relaxation(h, enc, b).objective_with_offset;
    if (lp < enc.objective_with_offset(x0, b) - 1e-7) last = b;
  }
  return last;
}

}  // namespace

TEST_CASE("aux LP toy: unbounded improvement is capped") {
  LpProblem p;
  p.num_vars = 1;
  p.cost = {1};
  p.rows.push_back({{1}, RowSense::GreaterEqual, 1});
  CHECK(theta_of(p, {-1}, {1}, 5.0) == doctest::Approx(5.0));
}

TEST_CASE("aux LP toy: breakpoint at theta = 1") {
  LpProblem p;
  p.num_vars = 2;
  p.cost = {1, 2};
  p.rows.push_back({{1, 1}, RowSense::GreaterEqual, 1});
  CHECK(theta_of(p, {0, 1}, {1, 0}, 10.0) == doctest::Approx(1.0));
  // Direct re-solves on both sides agree.
  for (double theta : {0.9, 1.1}) {
    LpProblem q = p;
    q.cost = {1, 2 - theta};
    const auto s = solve(q);
    CHECK((s.x[0] > 0.5) == (theta < 1.0));
  }
  // theta = 0 is always feasible from the original dual.
  CHECK(theta_of(p, {0, 1}, {1, 0}, 0.0) == doctest::Approx(0.0));
}

TEST_CASE("aux LP rejects equality rows and bad sizes") {
  LpProblem p;
  p.num_vars = 1;
  p.cost = {1};
  p.rows.push_back({{1}, RowSense::Equal, 1});
  CHECK_THROWS_AS(build_aux_lp(p, std::vector<double>{1}, std::vector<double>{1}, 1), InputError);
  p.rows[0].sense = RowSense::GreaterEqual;
  CHECK_THROWS_AS(build_aux_lp(p, std::vector<double>{1, 2}, std::vector<double>{1}, 1),
                  InputError);
}

TEST_CASE("beta_hat on the 3-node example matches a fine grid scan") {
  const auto h = testing::three_node();
  const auto r = beta_hat(h);
  CHECK(r.beta0 == doctest::Approx(3.0));
  CHECK(r.verified());
  CHECK(r.below_checked);
  CHECK(r.certificate.dual_residual <= 1e-7);
  CHECK(r.certificate.equality_residual <= 1e-6);
  const DrcecEncoding enc(h);
  const double last = last_gap_point(h, enc, r.x0, h.d_max() + 1.0);
  CHECK(std::abs(r.beta_hat - last) <= 2e-3);
  CHECK(r.beta_hat == doctest::Approx(1.0));
}

TEST_CASE("beta_hat is clamped when every clustering carries the same regularizer") {
  const LabeledHypergraph h(2, {"a", "b"}, {{0, {0, 1}}, {1, {0, 1}}});
  const auto r = beta_hat(h);
  CHECK(r.clamped);
  CHECK(r.beta_hat == 0.0);
  CHECK(r.verified());
}

TEST_CASE("beta_hat properties on random instances") {
  for (const auto& h : testing::corpus(30, 61, {3, 5, 2, 3, 1, 6, 3})) {
    const auto r = beta_hat(h);
    CHECK(r.beta_hat <= h.d_max() + 1.0);
    CHECK(r.verified());
    CHECK(r.certificate.dual_residual <= 1e-7);
    CHECK(r.certificate.equality_residual <= 1e-6);
    const double above = r.beta_hat + r.epsilon;
    const auto a = algorithm1(h, above);
    if (r.unique_minority) CHECK(is_minority_vote(h, a.clustering));
  }
}

TEST_CASE("stability interval brackets beta and matches re-solves") {
  for (const auto& h : testing::corpus(15, 62, {3, 5, 2, 3, 1, 6, 3})) {
    const DrcecEncoding enc(h);
    for (double beta : {0.25, 1.3}) {
      const auto iv = stability_interval(h, beta);
      CHECK(iv.beta_lo <= beta + 1e-9);
      CHECK(iv.beta_hi >= beta - 1e-9);
      // x stays optimal inside the interval.
      const double hi = iv.hi_unbounded ? beta + 5 : iv.beta_hi;
      for (double t : {iv.beta_lo, 0.5 * (iv.beta_lo + hi), hi}) {
        CHECK(solve_relaxation(h, enc, t).objective_with_offset ==
              doctest::Approx(enc.objective_with_offset(iv.x, t)).epsilon(1e-7));
      }
      // ... and strictly loses just outside a finite end.
      if (!iv.lo_clamped && iv.beta_lo > 1e-3) {
        const double t = iv.beta_lo - 1e-3;
        CHECK(solve_relaxation(h, enc, t).objective_with_offset <
              enc.objective_with_offset(iv.x, t) - 1e-7);
      }
      if (!iv.hi_unbounded) {
        const double t = iv.beta_hi + 1e-3;
        CHECK(solve_relaxation(h, enc, t).objective_with_offset <
              enc.objective_with_offset(iv.x, t) - 1e-7);
      }
    }
  }
}

TEST_CASE("interval slopes are non-increasing") {
  for (const auto& h : testing::corpus(10, 63, {3, 5, 2, 3, 1, 6, 3})) {
    const DrcecEncoding enc(h);
    double beta = 0.0;
    double prev_slope = std::numeric_limits<double>::infinity();
    for (int guard = 0; guard < 50; ++guard) {
      const auto iv = stability_interval(h, beta);
      // slope of the value curve on this piece is the regularizer mass of x
      const double slope = enc.const_offset() + [&] {
        double s = 0;
        for (std::size_t j = 0; j < iv.x.size(); ++j) s += enc.diversity_costs()[j] * iv.x[j];
        return s;
      }();
      CHECK(slope <= prev_slope + 1e-7);
      prev_slope = slope;
      if (iv.hi_unbounded) break;
      beta = iv.beta_hi + 1e-4;
    }
  }
}

TEST_CASE("sensitivity errors") {
  CHECK_THROWS_AS(beta_hat(testing::three_node(), -1.0), InputError);
}
