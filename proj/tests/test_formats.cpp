#include <catch2/catch_amalgamated.hpp>

#include "gencol/formats.hpp"
#include "oracles.hpp"

using namespace gencol;

TEST_CASE("graph6 encodes C5 as the standard string") {
  // the reference encoder builds the bit string explicitly
  CHECK(oracle::graph6(cycle_graph(5)) == "Dhc");
  CHECK(emit_graph6(cycle_graph(5)) == "Dhc");
  CHECK(emit_graph6(Graph()) == "?");
  CHECK(emit_graph6(empty_graph(1)) == "@");
  CHECK(emit_graph6(complete_graph(2)) == "A_");
}

TEST_CASE("graph6 matches the reference codec on random graphs, including the 4-byte header") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::size_t n = seed < 80 ? seed % 20 : 60 + seed;  // 60..159 crosses the 63 boundary
    auto g = random_graph(n, 0.3, seed);
    auto text = emit_graph6(g);
    REQUIRE(text == oracle::graph6(g));
    REQUIRE(parse_graph6(text) == g);
  }
  auto big = random_graph(Graph::kMaxOrder, 0.001, 7);
  CHECK(parse_graph6(emit_graph6(big)) == big);
}

TEST_CASE("graph6 diagnostics") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_WITH(parse_graph6("Dh"), Catch::Matchers::ContainsSubstring("truncated"));
  CHECK_THROWS_WITH(parse_graph6("Dhcc"), Catch::Matchers::ContainsSubstring("trailing"));
  try {
    parse_graph6("D!c");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 1);
  }
  CHECK(parse_graph6(">>graph6<<Dhc\n") == cycle_graph(5));
  // order above the cap in a 4-byte header
  CHECK_THROWS_AS(parse_graph6("~@?@"), ParseError);
}

TEST_CASE("edge list") {
  CHECK(parse_edge_list("3\n0 1\n1 2") == path_graph(3));
  CHECK(parse_edge_list("# comment\n3  # order\n\n0 1\n1 2 # tail\n") == path_graph(3));
  CHECK(emit_edge_list(path_graph(3)) == "3\n0 1\n1 2\n");

  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  CHECK(line_of("3\n0 1\n1 3\n") == 3);  // out of range
  CHECK(line_of("3\n0 1\n2 2\n") == 3);  // loop
  CHECK(line_of("3\n0 x\n") == 2);
  CHECK(line_of("three\n") == 1);
  CHECK(line_of("3\n0 1 2\n") == 2);
  CHECK_THROWS_AS(parse_edge_list("# nothing\n"), ParseError);
}

TEST_CASE("dimacs") {
  auto g = parse_dimacs("c petersen-like\np edge 3 2\ne 1 2\ne 2 3\ne 2 1\n");
  CHECK(g == path_graph(3));
  CHECK(emit_dimacs(path_graph(3)) == "p edge 3 2\ne 1 2\ne 2 3\n");
  CHECK_THROWS_AS(parse_dimacs("e 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 3\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 3 1\ne 1 4\n"), ParseError);
  CHECK_THROWS_AS(parse_dimacs("p edge 3 1\nx 1 2\n"), ParseError);
}

TEST_CASE("all three formats round-trip every graph up to order 6") {
  for (auto format : {GraphFormat::graph6, GraphFormat::edge_list, GraphFormat::dimacs})
    for (std::size_t p = 0; p <= 6; ++p)
      for_each_labeled_graph(p, [format](const Graph& g) {
        auto text = emit_graph(format, g);
        REQUIRE(parse_graph(format, text) == g);
        REQUIRE(detect_format(text) == format);
      });
}

TEST_CASE("format names") {
  CHECK(format_from_name("g6") == GraphFormat::graph6);
  CHECK(format_from_name("edge_list") == GraphFormat::edge_list);
  CHECK(format_from_name("dimacs") == GraphFormat::dimacs);
  CHECK_FALSE(format_from_name("gml").has_value());
}
