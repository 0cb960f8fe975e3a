#include <catch2/catch_amalgamated.hpp>

#include "gencol/recognizer.hpp"
#include "gencol/reductions.hpp"
#include "oracles.hpp"

using namespace gencol;

namespace {

const PropertySpec kEdgeless = specs::edgeless();
const PropertySpec kComplete = specs::complete();

}  // namespace

TEST_CASE("maximal K_n-free sets from the greedy scan") {
  CHECK(maximal_knfree(complete_graph(4), 2) == VertexSet(4, {0}));
  CHECK(maximal_knfree(cycle_graph(4), 2) == VertexSet(4, {0, 2}));
  CHECK(maximal_knfree(empty_graph(5), 3) == VertexSet::full(5));
  CHECK(maximal_knfree(complete_graph(5), 3) == VertexSet(5, {0, 1}));
  CHECK(maximal_knfree(cycle_graph(5), 1).empty());
}

TEST_CASE("maximal K_n-free sets are K_n-free and maximal") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = random_graph(6 + seed % 10, 0.5, seed);
    for (std::size_t n = 2; n <= 4; ++n) {
      auto b = maximal_knfree(g, n);
      GraphView view(g);
      REQUIRE_FALSE(has_clique(view, b, n));
      for (Vertex v : ~b) {
        auto bigger = b;
        bigger.insert(v);
        REQUIRE(has_clique(view, bigger, n));
      }
    }
  }
}

TEST_CASE("try_augment examples") {
  auto k2 = complete_graph(2);
  CHECK(try_augment(k2, VertexSet(2), kEdgeless, 1) == VertexSet(2, {0}));
  auto c5 = cycle_graph(5);
  CHECK_FALSE(try_augment(c5, c5.vertices(), specs::bipartite(), 2).has_value());
  CHECK_FALSE(try_augment(cycle_graph(4), VertexSet(4, {0, 2}), kEdgeless, 1).has_value());
  // swapping one vertex for two: {1} -> {0, 2} on P3
  CHECK(try_augment(path_graph(3), VertexSet(3, {1}), kEdgeless, 1) == VertexSet(3, {0, 2}));
  CHECK_FALSE(try_augment(path_graph(3), VertexSet(3, {1}), kEdgeless, 0).has_value());
}

TEST_CASE("find_witness examples") {
  auto p4 = path_graph(4);
  auto cert = find_witness(p4, VertexSet(4, {0, 2}), kEdgeless, kComplete, 1);
  REQUIRE(cert.has_value());
  CHECK(certificate_valid(p4, *cert, kEdgeless, kComplete));
  CHECK(oracle::is_split(p4));

  CHECK_FALSE(find_witness(cycle_graph(4), VertexSet(4, {0, 2}), kEdgeless, kComplete, 1).has_value());
  CHECK_FALSE(oracle::is_split(cycle_graph(4)));

  auto k3bar = empty_graph(3);
  auto trivial = find_witness(k3bar, k3bar.vertices(), kEdgeless, kComplete, 1);
  REQUIRE(trivial.has_value());
  CHECK(trivial->part_a == k3bar.vertices());
  CHECK(trivial->part_rest.empty());
}

TEST_CASE("recognize examples") {
  auto yes = recognize(path_graph(4), kEdgeless, kComplete);
  CHECK(yes.member);
  REQUIRE(yes.certificate.has_value());
  CHECK(certificate_valid(path_graph(4), *yes.certificate, kEdgeless, kComplete));
  CHECK(yes.tau == 1u);
  CHECK(yes.clique_bound->n == 2u);
  CHECK(yes.co_clique_bound->n == 2u);

  auto no = recognize(cycle_graph(4), kEdgeless, kComplete);
  CHECK_FALSE(no.member);
  CHECK_FALSE(no.certificate.has_value());

  // The triangle-gadget pair has an unbounded co-clique bound: Algorithm A
  // refuses and the oracle decides.
  auto gadget = disjoint_union(cycle_graph(5), complete_graph(3));
  auto q = specs::co(specs::cluster());
  CHECK_THROWS_AS(recognize(gadget, specs::bipartite(), q), InapplicableError);
  CHECK(brute_force(gadget, specs::bipartite(), q).member);

  CHECK_THROWS_WITH(recognize(path_graph(3), specs::complete(), kComplete),
                    Catch::Matchers::ContainsSubstring("unbounded clique bound"));
}

TEST_CASE("brute force examples") {
  auto k1 = brute_force(empty_graph(1), kEdgeless, kComplete);
  CHECK(k1.member);
  CHECK(k1.certificate->part_a == VertexSet(1, {}));  // mask 0: A empty, {0} is a clique
  CHECK_FALSE(brute_force(cycle_graph(5), kEdgeless, kComplete).member);
  CHECK(brute_force(cycle_graph(5), kEdgeless, kComplete).trace.oracle_subsets_examined == 32);
  CHECK(brute_force(Graph(), kEdgeless, kComplete).member);
  CHECK_THROWS_AS(brute_force(Graph(25), kEdgeless, kComplete), LimitError);
}

TEST_CASE("parallel brute force returns the same smallest certificate") {
  auto p = specs::bipartite();
  auto q = specs::co(specs::bipartite());
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    auto g = random_graph(11, 0.5, seed);
    auto one = brute_force(g, p, q);
    auto many = brute_force(g, p, q, {.workers = 4});
    REQUIRE(one.member == many.member);
    if (one.member) REQUIRE(one.certificate->part_a == many.certificate->part_a);
  }
}

TEST_CASE("Algorithm A agrees with brute force on every split instance up to order 6") {
  for (std::size_t p = 0; p <= 6; ++p)
    for_each_labeled_graph(p, [&](const Graph& g) {
      auto fast = recognize(g, kEdgeless, kComplete);
      auto slow = brute_force(g, kEdgeless, kComplete);
      INFO(emit_graph6(g));
      REQUIRE(fast.member == slow.member);
      REQUIRE(fast.member == oracle::is_split(g));
      if (fast.member) REQUIRE(certificate_valid(g, *fast.certificate, kEdgeless, kComplete));
      REQUIRE(fast.trace.step2_iterations <= p);
      REQUIRE(fast.trace.step3_candidates_examined <= step3_bound(p, 1));
    });
}

TEST_CASE("inflating tau never changes the answer") {
  for (std::size_t p = 0; p <= 6; ++p)
    for_each_labeled_graph(p, [&](const Graph& g) {
      auto base = recognize(g, kEdgeless, kComplete);
      auto loose = recognize(g, kEdgeless, kComplete, {.tau_override = 2});
      REQUIRE(base.member == loose.member);
      REQUIRE(loose.trace.tau_used == 2);
    });
}

TEST_CASE("graphs already in P or in Q are accepted") {
  auto p = specs::bipartite();
  auto q = specs::co(specs::bipartite());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    auto g = random_graph(5 + seed % 6, 0.3, seed);
    if (check(p, g)) REQUIRE(recognize(g, p, q).member);
    auto h = complement(g);
    if (check(q, h)) REQUIRE(recognize(h, p, q).member);
  }
}

TEST_CASE("Algorithm A agrees with brute force on random polar instances") {
  auto p = parse_spec("free(K3,P3)");
  auto q = parse_spec("co(free(K3,P3))");
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto g = random_graph(8 + seed % 3, 0.5, seed);
    auto fast = recognize(g, p, q);
    REQUIRE(fast.tau == 5u);
    REQUIRE(fast.member == brute_force(g, p, q).member);
    REQUIRE(fast.trace.step2_peak_candidates <= step2_round_bound(g.order(), 5));
  }
}

TEST_CASE("closed-form candidate bounds") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 4) == 0);
  CHECK(step2_round_bound(4, 1) == 1 * 4 + 4 * 6);
  CHECK(step3_bound(4, 1) == 25);
}
