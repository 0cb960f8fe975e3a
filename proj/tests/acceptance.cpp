// Acceptance driver: runs every acceptance criterion end to end and prints one
// PASS/FAIL line per criterion. Optional arguments select criteria by name
// (e.g. `acceptance AC3 AC8`). GENCOL_WORKERS sets the sweep thread count.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gencol/gencol.hpp"

using namespace gencol;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::size_t workers() {
  if (const char* w = std::getenv("GENCOL_WORKERS")) {
    try {
      return std::max<std::size_t>(1, std::stoul(w));
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

// Sweep reports from AC1, reused by AC7.
std::vector<PairReport> g_sweeps;

Outcome ac1_oracle_matrix() {
  struct Row {
    const char* p;
    const char* q;
    std::size_t random_count;
    std::size_t random_min;
    std::size_t random_max;
  };
  const std::vector<Row> rows = {
      {"edgeless", "complete", 1000, 10, 14},
      {"free(K3,P3)", "co(free(K3,P3))", 200, 10, 10},
      {"free(K2,P3)", "co(free(K2,P3))", 1000, 10, 14},
      {"bipartite", "co(bipartite)", 200, 10, 10},
  };
  std::ostringstream detail;
  bool pass = true;
  g_sweeps.clear();
  for (const auto& row : rows) {
    SweepConfig config;
    config.p_max = 7;
    config.random_count = row.random_count;
    config.random_min_order = row.random_min;
    config.random_max_order = row.random_max;
    config.seed = 20240601;
    config.workers = workers();
    auto report = run_sweep(parse_spec(row.p), parse_spec(row.q), config);
    pass = pass && report.disagreements == 0 && report.agreements == report.graphs;
    detail << "\n    " << report.p_spec << " | " << report.q_spec << " (tau " << report.tau << "): "
           << report.agreements << "/" << report.graphs << " agree, " << report.members << " members, "
           << report.seconds << "s";
    for (const auto& s : report.disagreement_samples) detail << "\n      disagreement on " << s;
    g_sweeps.push_back(std::move(report));
  }
  return {pass, detail.str()};
}

Outcome ac2_split_characterization() {
  auto product = specs::product({specs::edgeless(), specs::complete()});
  auto forbidden = parse_spec("free(2K2,C4,C5)");
  std::uint64_t graphs = 0, agree = 0, split = 0;
  for (std::size_t p = 0; p <= 7; ++p)
    for_each_labeled_graph(p, [&](const Graph& g) {
      bool a = check(product, g);
      bool b = check(forbidden, g);
      ++graphs;
      agree += a == b;
      split += a;
    });
  return {agree == graphs,
          std::to_string(agree) + "/" + std::to_string(graphs) + " agree, " + std::to_string(split) + " split"};
}

Outcome ac3_ramsey() {
  std::size_t verified = 0;
  std::ostringstream failures;
  for (std::size_t m = 1; m <= 16; ++m)
    for (std::size_t n = 1; n <= 16; ++n) {
      auto b = tau(m, n);
      if (b.tau + 1 > kRamseyVerifyOrder) continue;
      if (verify_tau(m, n, b.tau))
        ++verified;
      else
        failures << " (" << m << "," << n << ")";
    }
  bool counterexample = !verify_tau(3, 3, 4);
  auto f = failures.str();
  return {f.empty() && counterexample, std::to_string(verified) + " (m,n) cells verified; verify_tau(3,3,4) = " +
                                           (counterexample ? "false" : "true") + (f.empty() ? "" : "; failed:" + f)};
}

Outcome gadget_equivalence(const std::function<Graph(const Graph&)>& gadget, const PropertySpec& p,
                           const PropertySpec& q) {
  std::uint64_t graphs = 0, agree = 0, colorable = 0;
  std::string first_bad;
  for (std::size_t order = 0; order <= 6; ++order)
    for_each_labeled_graph(order, [&](const Graph& g) {
      bool c = is_k_colorable(g, 3);
      bool b = brute_force(gadget(g), p, q).member;
      ++graphs;
      colorable += c;
      if (c == b)
        ++agree;
      else if (first_bad.empty())
        first_bad = emit_graph6(g);
    });
  return {agree == graphs, std::to_string(agree) + "/" + std::to_string(graphs) + " agree, " +
                               std::to_string(colorable) + " 3-colorable" +
                               (first_bad.empty() ? "" : "; first mismatch " + first_bad)};
}

Outcome ac4_triangle_gadget() {
  return gadget_equivalence(t6_gadget, specs::bipartite(), specs::co(specs::cluster()));
}

Outcome ac5_universal_vertex_gadget() {
  return gadget_equivalence(t7_gadget, specs::bipartite(), specs::complete_bipartite());
}

Outcome ac6_gh_equivalence() {
  auto witnesses = find_unique_witnesses({specs::edgeless(), specs::complete()}, 1, 6);
  if (witnesses.empty()) return {false, "no witness found among hosts on at most 6 vertices"};
  std::uint64_t cases = 0, agree = 0;
  std::size_t smallest = witnesses.front().host.order();
  for (const auto& w : witnesses) {
    auto p = witness_p_spec(w);
    auto q = witness_q_spec(w);
    for (std::size_t order = 0; order <= 4; ++order)
      for_each_labeled_graph(order, [&](const Graph& g) {
        ++cases;
        agree += check(p, g) == brute_force(gh_combinator(g, w), p, q).member;
      });
  }
  return {agree == cases, std::to_string(witnesses.size()) + " witnesses (smallest host on " + std::to_string(smallest) +
                              " vertices, " + emit_graph6(witnesses.front().host) + "); " + std::to_string(agree) + "/" +
                              std::to_string(cases) + " agree"};
}

Outcome ac7_trace_bounds() {
  if (g_sweeps.empty()) ac1_oracle_matrix();
  bool pass = true;
  std::ostringstream detail;
  for (const auto& r : g_sweeps) {
    pass = pass && r.bound_violations == 0;
    detail << "\n    " << r.p_spec << " | " << r.q_spec << ": " << r.bound_violations
           << " violations; max step2 iterations " << r.max_step2_iterations << ", max step2 round candidates "
           << r.max_step2_peak << ", max step3 candidates " << r.max_step3;
    for (const auto& s : r.violation_samples) detail << "\n      violation on " << s;
  }
  return {pass, detail.str()};
}

Outcome ac8_tau_inflation() {
  auto p = specs::edgeless();
  auto q = specs::complete();
  const std::size_t base_tau = tau(2, 2).tau;
  std::uint64_t graphs = 0, same = 0;
  for (std::size_t order = 0; order <= 6; ++order)
    for_each_labeled_graph(order, [&](const Graph& g) {
      ++graphs;
      same += recognize(g, p, q).member == recognize(g, p, q, {.tau_override = base_tau + 1}).member;
    });
  return {same == graphs, std::to_string(same) + "/" + std::to_string(graphs) + " identical with tau " +
                              std::to_string(base_tau + 1)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1", ac1_oracle_matrix},       {"AC2", ac2_split_characterization}, {"AC3", ac3_ramsey},
      {"AC4", ac4_triangle_gadget},     {"AC5", ac5_universal_vertex_gadget}, {"AC6", ac6_gh_equivalence},
      {"AC7", ac7_trace_bounds},        {"AC8", ac8_tau_inflation},
  };
  std::vector<std::string> selected(argv + 1, argv + argc);
  auto wanted = [&](const std::string& name) {
    return selected.empty() || std::find(selected.begin(), selected.end(), name) != selected.end();
  };

  int failures = 0;
  for (const auto& [name, run] : criteria) {
    if (!wanted(name)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << name << " " << (o.pass ? "PASS" : "FAIL") << " [" << seconds << "s] " << o.detail << std::endl;
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
