#include <doctest.h>

#include <map>

#include "drcec/error.hpp"
#include "drcec/vote.hpp"
#include "support.hpp"

using namespace drcec;

TEST_CASE("vote examples on the 3-node example") {
  const auto h = testing::three_node();
  CHECK(majority_vote(h) == Clustering{{0, 0, 1}});
  CHECK(minority_vote(h) == Clustering{{1, 0, 0}});
  CHECK(is_majority_vote(h, Clustering{{0, 1, 1}}));
  CHECK(is_minority_vote(h, Clustering{{1, 1, 0}}));
  CHECK_FALSE(is_minority_vote(h, Clustering{{0, 0, 0}}));
  CHECK_FALSE(minority_vote_unique(h));
  CHECK(naive_objective(h, majority_vote(h), 1.0) == doctest::Approx(4.0));
  CHECK(naive_objective(h, minority_vote(h), 1.0) == doctest::Approx(4.0));
}

TEST_CASE("vote sets match recount") {
  for (const auto& h : testing::corpus(80, 31)) {
    const auto d = testing::recount(h);
    const auto mins = minority_sets(h);
    const auto maxs = majority_sets(h);
    for (NodeId v = 0; v < h.num_nodes(); ++v) {
      for (ColorId c = 0; c < h.num_colors(); ++c) {
        const bool in_min = std::find(mins[v].begin(), mins[v].end(), c) != mins[v].end();
        const bool in_max = std::find(maxs[v].begin(), maxs[v].end(), c) != maxs[v].end();
        CHECK(in_min == testing::in_minority_set(d[v], c));
        CHECK(in_max == testing::in_majority_set(d[v], c));
      }
    }
    CHECK(is_minority_vote(h, minority_vote(h)));
    CHECK(is_majority_vote(h, majority_vote(h)));
  }
}

TEST_CASE("seeded tie-breaking stays inside the tie set and is reproducible") {
  const LabeledHypergraph h(4, {"a", "b", "c"}, {{0, {0}}});
  std::map<ColorId, int> seen;
  for (std::uint64_t s = 0; s < 50; ++s) {
    auto t1 = TieBreaker::seeded(s);
    auto t2 = TieBreaker::seeded(s);
    const auto c = minority_vote(h, t1);
    CHECK(c == minority_vote(h, t2));
    CHECK(is_minority_vote(h, c));
    ++seen[c[1]];
  }
  CHECK(seen.size() == 3);
}

TEST_CASE("votes are invariant under edge order") {
  std::mt19937_64 rng(32);
  for (const auto& h : testing::corpus(40, 33)) {
    auto edges = h.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    const LabeledHypergraph g(h.num_nodes(), h.colors(), edges);
    CHECK(minority_vote(g) == minority_vote(h));
    CHECK(majority_vote(g) == majority_vote(h));
  }
}

TEST_CASE("naive_optimum is a true maximizer of the naive objective") {
  for (const auto& h : testing::corpus(60, 34)) {
    for (double beta : {0.5, 1.0, 2.0}) {
      double best = -1;
      testing::enumerate(h.num_nodes(), h.num_colors(), [&](const std::vector<ColorId>& a) {
        best = std::max(best, naive_objective(h, Clustering{a}, beta));
      });
      CHECK(naive_objective(h, naive_optimum(h, beta), beta) == doctest::Approx(best));
    }
  }
}

TEST_CASE("exact_ilp on the 3-node example") {
  const auto h = testing::three_node();
  const auto s0 = exact_ilp(h, 0.0);
  CHECK(s0.breakdown.edge_cost == 1);
  CHECK(s0.clustering == Clustering{{0, 0, 0}});
  const auto s3 = exact_ilp(h, 3.0);
  CHECK(is_minority_vote(h, s3.clustering));
  CHECK(s3.clustering == Clustering{{1, 0, 0}});
}

TEST_CASE("exact_ilp matches brute force and returns the lexicographically smallest optimum") {
  for (const auto& h : testing::corpus(60, 35, {3, 6, 2, 3, 1, 8, 4})) {
    for (double beta : {0.0, 0.3, 1.0, h.d_max() + 1.0}) {
      const auto s = exact_ilp(h, beta);
      const double best = testing::brute_force_optimum(h, beta);
      CHECK(s.breakdown.total() == doctest::Approx(best));
      std::optional<std::vector<ColorId>> first;
      testing::enumerate(h.num_nodes(), h.num_colors(), [&](const std::vector<ColorId>& a) {
        const auto r = testing::raw_cost(h, a);
        const double t = static_cast<double>(r.edges) + beta * static_cast<double>(r.penalty);
        if (std::abs(t - best) < 1e-9 && (!first || a < *first)) first = a;
      });
      CHECK(s.clustering.assignment == *first);
    }
  }
}

TEST_CASE("exact_ilp above d_max is a minority vote") {
  for (const auto& h : testing::corpus(80, 36, {3, 7, 2, 3, 1, 10, 4})) {
    CHECK(is_minority_vote(h, exact_ilp(h, h.d_max() + 0.5).clustering));
  }
}

TEST_CASE("enumeration budget") {
  const LabeledHypergraph big(13, {"a", "b"}, {{0, {0}}});
  CHECK_THROWS_AS(exact_ilp(big, 0.0), BudgetExceeded);
  CHECK_NOTHROW(exact_ilp(big, 0.0, EnumerationBudget{13, 1u << 14}));
  CHECK_THROWS_AS(exact_ilp(big, 0.0, EnumerationBudget{13, 1000}), BudgetExceeded);
  const LabeledHypergraph none(2, {}, {});
  CHECK_THROWS_AS(exact_ilp(none, 0.0), InputError);
  CHECK_THROWS_AS(exact_ilp(testing::three_node(), -1.0), InputError);
}

TEST_CASE("for_each_clustering visits k^n assignments in lexicographic order") {
  const auto h = testing::three_node();
  std::vector<Clustering> seen;
  for_each_clustering(h, {}, [&](const Clustering& c) { seen.push_back(c); });
  CHECK(seen.size() == 8);
  CHECK(std::is_sorted(seen.begin(), seen.end()));
  CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  const LabeledHypergraph empty(0, {"a"}, {});
  int visits = 0;
  for_each_clustering(empty, {}, [&](const Clustering&) { ++visits; });
  CHECK(visits == 1);
}

TEST_CASE("x0_set") {
  const auto h = testing::three_node();
  const auto x0 = x0_set(h);
  // Cost 1 everywhere except a clustering that breaks both edges.
  std::vector<Clustering> expect;
  testing::enumerate(3, 2, [&](const std::vector<ColorId>& a) {
    if (testing::raw_cost(h, a).edges == 1) expect.push_back(Clustering{a});
  });
  std::sort(expect.begin(), expect.end());
  CHECK(x0 == expect);

  const LabeledHypergraph disjoint(4, {"a", "b"}, {{0, {0, 1}}, {1, {2, 3}}});
  const auto d = x0_set(disjoint);
  CHECK(std::find(d.begin(), d.end(), Clustering{{0, 0, 1, 1}}) != d.end());
  CHECK(d.size() == 1);
  const LabeledHypergraph no_edges(2, {"a", "b"}, {});
  CHECK(x0_set(no_edges).size() == 4);
}

TEST_CASE("deviation threshold") {
  // Node 0 has degrees [3,1]; the other edges only involve nodes 1..2.
  const LabeledHypergraph h(3, {"a", "b"},
                            {{0, {0}}, {0, {0}}, {0, {0}}, {1, {0}}, {1, {1, 2}}});
  // Best beta=0 cost: node 0 in a (violates one b edge) -> x_ce = [a, b, b].
  const Clustering x_ce{{0, 1, 1}};
  const auto t = deviation_threshold(h, 0, x_ce);
  REQUIRE(t.has_value());
  CHECK(*t == doctest::Approx(2.0));

  const LabeledHypergraph flat(2, {"a", "b"}, {{0, {0}}, {1, {0}}, {0, {1}}});
  CHECK_FALSE(deviation_threshold(flat, 0, Clustering{{0, 0}}).has_value());
  const LabeledHypergraph iso(2, {"a", "b"}, {{0, {0}}});
  CHECK_FALSE(deviation_threshold(iso, 1, Clustering{{0, 0}}).has_value());
  CHECK_THROWS_AS(deviation_threshold(h, 0, Clustering{{1, 0, 0}}), InputError);
}
