#include <catch2/catch_amalgamated.hpp>

#include "gencol/graph_view.hpp"
#include "gencol/ramsey.hpp"

using namespace gencol;

namespace {

// Independent check through the general-purpose Graph/GraphView machinery.
bool every_graph_forced(std::size_t m, std::size_t n, std::size_t order) {
  bool forced = true;
  for_each_labeled_graph(order, [&](const Graph& g) {
    GraphView view(g);
    forced = has_clique(view, n) || has_independent_set(view, m);
    return forced;
  });
  return forced;
}

}  // namespace

TEST_CASE("tau table values") {
  CHECK(tau(2, 2) == RamseyBound{2, 2, 1, true});
  for (std::size_t n = 1; n <= 16; ++n) {
    CHECK(tau(2, n).tau == n - 1);
    CHECK(tau(2, n).exact);
    CHECK(tau(n, 2).tau == n - 1);
    CHECK(tau(1, n).tau == 0);
  }
  CHECK(tau(3, 3) == RamseyBound{3, 3, 5, true});
  CHECK(tau(3, 4).tau == 8);
  CHECK(tau(4, 3).tau == 8);
  CHECK(tau(3, 5).tau == 13);
  CHECK(tau(4, 4).tau == 17);
  CHECK(tau(4, 4).exact);
}

TEST_CASE("tau beyond the table uses the recurrence and is flagged inexact") {
  // R(3,6) <= R(2,6) + R(3,5) = 6 + 14
  CHECK(tau(3, 6) == RamseyBound{3, 6, 19, false});
  // R(4,5) <= R(3,5) + R(4,4) = 14 + 18
  CHECK(tau(4, 5) == RamseyBound{4, 5, 31, false});
  CHECK(tau(5, 4).tau == 31);
  CHECK_THROWS_AS(tau(0, 3), InvalidArgument);
}

TEST_CASE("tau is monotone in both arguments") {
  for (std::size_t m = 1; m < 16; ++m)
    for (std::size_t n = 1; n < 16; ++n) {
      CHECK(tau(m, n).tau <= tau(m + 1, n).tau);
      CHECK(tau(m, n).tau <= tau(m, n + 1).tau);
      CHECK(tau(m, n).tau == tau(n, m).tau);
    }
}

TEST_CASE("verify_tau examples") {
  CHECK(verify_tau(3, 3, 5));
  CHECK_FALSE(verify_tau(3, 3, 4));  // C5 has neither K3 nor an independent triple
  CHECK(verify_tau(2, 2, 1));
  CHECK_FALSE(verify_tau(2, 2, 0));
  CHECK(verify_tau(1, 5, 0));
  CHECK_THROWS_AS(verify_tau(3, 4, 8), LimitError);
}

TEST_CASE("verify_tau matches the generic enumeration") {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t t = 0; t + 1 <= 6; ++t) {
        INFO("m=" << m << " n=" << n << " t=" << t);
        REQUIRE(verify_tau(m, n, t) == every_graph_forced(m, n, t + 1));
      }
}

TEST_CASE("verify_tau is symmetric under complementation") {
  for (std::size_t m = 1; m <= 4; ++m)
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::size_t t = 0; t + 1 <= 6; ++t) REQUIRE(verify_tau(m, n, t) == verify_tau(n, m, t));
}

TEST_CASE("exact tau values are tight") {
  for (std::size_t m = 1; m <= 16; ++m)
    for (std::size_t n = 1; n <= 16; ++n) {
      auto b = tau(m, n);
      if (!b.exact || b.tau + 1 > 7) continue;
      INFO("m=" << m << " n=" << n);
      CHECK(verify_tau(m, n, b.tau));
      if (b.tau > 0) CHECK_FALSE(verify_tau(m, n, b.tau - 1));
    }
}
