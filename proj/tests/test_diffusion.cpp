#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tcent/diffusion.hpp"

using namespace tcent;
using namespace tcent::testing;

TEST_CASE("CoverageThreshold from decimal is exact") {
  CHECK(CoverageThreshold::from_decimal("0.1", 160).required_count() == 16);
  CHECK(CoverageThreshold::from_decimal("0.6", 160).required_count() == 96);
  CHECK(CoverageThreshold::from_decimal("0.5", 4).required_count() == 2);
  CHECK(CoverageThreshold::from_decimal("1", 4).required_count() == 4);
  CHECK(CoverageThreshold::from_decimal("1.000", 4).required_count() == 4);
  CHECK(CoverageThreshold::from_decimal(".25", 4).required_count() == 1);
  CHECK(CoverageThreshold::from_decimal("0.26", 4).required_count() == 2);
  CHECK(CoverageThreshold::from_decimal("0.3", 10).required_count() == 3);  // 0.3 * 10 in floats is 3.0000000000000004
  CHECK(CoverageThreshold::from_decimal("0.001", 160).required_count() == 1);
  CHECK(CoverageThreshold::from_decimal("0.1", 160).text() == "0.1");

  for (const char* bad : {"0", "0.0", "1.5", "2", "-0.1", "abc", "", ".", "1.", "1e-1", "0.1.2", " 0.1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS((void)CoverageThreshold::from_decimal(bad, 10), std::invalid_argument);
  }
  CHECK_THROWS_AS((void)CoverageThreshold::from_count(0, 4), std::invalid_argument);
  CHECK_THROWS_AS((void)CoverageThreshold::from_count(5, 4), std::invalid_argument);
  CHECK(CoverageThreshold::from_count(3, 4).required_count() == 3);
}

TEST_CASE("diffuse: hand-traced chain") {
  Tvg g = chain4();
  DiffusionTrace from_a = diffuse(g, {kA, 0});
  CHECK(from_a.sizes == std::vector<std::uint32_t>{1, 2, 3, 4});
  CHECK(from_a.exhausted);

  DiffusionTrace from_d = diffuse(g, {kD, 2});
  CHECK(from_d.sizes == std::vector<std::uint32_t>{1, 2});
  CHECK(from_d.exhausted);

  DiffusionTrace budget = diffuse(g, {kA, 0}, {std::nullopt, 2});
  CHECK(budget.sizes == std::vector<std::uint32_t>{1, 2, 3});
  CHECK_FALSE(budget.exhausted);

  DiffusionTrace target = diffuse(g, {kA, 0}, {3, std::nullopt});
  CHECK(target.sizes == std::vector<std::uint32_t>{1, 2, 3});
  CHECK_FALSE(target.exhausted);
}

TEST_CASE("diffuse: one hop per snapshot") {
  // Path a-b-c-d entirely inside t0: only b hears from a during t0.
  std::vector<Contact> path{{kA, kB, 0}, {kB, kC, 0}, {kC, kD, 0}};
  Tvg g = Tvg::build(4, 2, path);
  CHECK(diffuse(g, {kA, 0}).sizes == std::vector<std::uint32_t>{1, 2, 2});
  CHECK(diffuse(g, {kB, 0}).sizes == std::vector<std::uint32_t>{1, 3, 3});
}

TEST_CASE("diffuse: idle steps do not stop the diffusion") {
  std::vector<Contact> late{{kA, kB, 5}};
  Tvg g = Tvg::build(2, 6, late);
  CHECK(diffuse(g, {kA, 0}).sizes == std::vector<std::uint32_t>{1, 1, 1, 1, 1, 1, 2});
}

TEST_CASE("diffuse: empty snapshots") {
  Tvg g = Tvg::build(5, 4, {});
  for (NodeId u = 0; u < 5; ++u) {
    for (TimeIndex t = 0; t < 4; ++t) {
      auto trace = diffuse(g, {u, t});
      for (auto s : trace.sizes) CHECK(s == 1);
      CHECK(trace.sizes.size() == 4 - t + 1);
    }
  }
}

TEST_CASE("diffuse: invalid start") {
  Tvg g = chain4();
  CHECK_THROWS_AS((void)diffuse(g, {4, 0}), std::out_of_range);
  CHECK_THROWS_AS((void)diffuse(g, {0, 3}), std::out_of_range);
}

TEST_CASE("cover_steps") {
  Tvg g = chain4();
  CHECK(cover_steps(g, {kA, 0}, CoverageThreshold::from_decimal("0.5", 4)) == 1u);
  CHECK(cover_steps(g, {kD, 2}, CoverageThreshold::from_decimal("1", 4)) == std::nullopt);
  for (NodeId u = 0; u < 4; ++u) {
    for (TimeIndex t = 0; t < 3; ++t) CHECK(cover_steps(g, {u, t}, CoverageThreshold::from_count(1, 4)) == 0u);
  }
  // Independent route: the expanded digraph.
  for (NodeId u = 0; u < 4; ++u) {
    for (TimeIndex t = 0; t < 3; ++t) {
      for (std::uint32_t req = 1; req <= 4; ++req) {
        StepCount got = cover_steps(g, {u, t}, CoverageThreshold::from_count(req, 4));
        long want = oracle_cover_steps(g, {u, t}, req);
        CHECK(got.has_value() == (want >= 0));
        if (got) CHECK(static_cast<long>(*got) == want);
      }
    }
  }
}

TEST_CASE("constrained_count") {
  Tvg g = chain4();
  CHECK(constrained_count(g, {kA, 0}, 1) == 2);
  CHECK(constrained_count(g, {kC, 0}, 1) == 1);
  CHECK(constrained_count(g, {kA, 0}, 3) == 4);
  CHECK(constrained_count(g, {kA, 0}, 1000) == 4);
  CHECK(constrained_count(g, {kD, 2}, 1000) == 2);
  CHECK_THROWS_AS((void)constrained_count(g, {kA, 0}, 0), std::invalid_argument);
}

TEST_CASE("engine reuse leaves no residue between runs") {
  Tvg g = chain4();
  DiffusionEngine engine(g);
  (void)engine.diffuse({kA, 0});
  CHECK(engine.informed() == std::vector<NodeId>{kA, kB, kC, kD});
  (void)engine.diffuse({kD, 2});
  CHECK(engine.informed() == std::vector<NodeId>{kC, kD});
  CHECK(engine.constrained_count({kC, 0}, 1) == 1);
}

TEST_CASE("property: trace invariants, budget monotonicity, step/budget consistency") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const double p = trial % 3 == 0 ? 0.1 : (trial % 3 == 1 ? 0.3 : 0.6);
    Tvg g = random_small_tvg(rng, 10, 12, p);
    const std::uint32_t n = g.num_nodes(), big_n = g.num_instants();
    DiffusionEngine engine(g);
    for (TimeIndex t = 0; t < big_n; ++t) {
      for (NodeId u = 0; u < n; ++u) {
        auto trace = engine.diffuse({u, t});
        REQUIRE(trace.sizes.front() == 1);
        CHECK(trace.sizes.size() - 1 <= big_n - t);
        for (std::size_t s = 0; s + 1 < trace.sizes.size(); ++s) CHECK(trace.sizes[s] <= trace.sizes[s + 1]);
        CHECK(trace.sizes.back() <= n);

        std::uint32_t prev = 1;
        for (std::uint32_t phi = 1; phi <= big_n - t + 2; ++phi) {
          std::uint32_t c = engine.constrained_count({u, t}, phi);
          CHECK(c >= prev);
          CHECK(c == trace.sizes[std::min<std::size_t>(phi, trace.sizes.size() - 1)]);
          prev = c;
        }

        for (std::uint32_t req = 1; req <= n; ++req) {
          StepCount s = engine.cover_steps({u, t}, req);
          if (!s) {
            CHECK(trace.sizes.back() < req);
            continue;
          }
          if (*s == 0) {
            CHECK(req == 1);
            continue;
          }
          CHECK(engine.constrained_count({u, t}, *s) >= req);
          if (*s >= 2) CHECK(engine.constrained_count({u, t}, *s - 1) < req);
          if (*s == 1) CHECK(req > 1);
        }
      }
    }
  }
}

TEST_CASE("property: result is independent of contact order") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    Tvg g = random_small_tvg(rng, 9, 10, 0.3);
    auto contacts = g.contacts();
    // Relabel nodes by reversal, which reverses neighbor and contact order.
    const NodeId last = g.num_nodes() - 1;
    for (auto& c : contacts) c = {last - c.a, last - c.b, c.time};
    Tvg mirrored = Tvg::build(g.num_nodes(), g.num_instants(), contacts);
    for (TimeIndex t = 0; t < g.num_instants(); ++t) {
      for (NodeId u = 0; u < g.num_nodes(); ++u) {
        CHECK(diffuse(g, {u, t}).sizes == diffuse(mirrored, {last - u, t}).sizes);
      }
    }
  }
}
