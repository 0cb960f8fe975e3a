#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "gencol/formats.hpp"
#include "gencol/graph.hpp"
#include "gencol/json_io.hpp"
#include "gencol/properties.hpp"
#include "gencol/ramsey.hpp"
#include "gencol/recognizer.hpp"

namespace gencol {

struct SweepConfig {
  std::size_t p_max = 6;  // exhaustive over every labeled graph on 0..p_max vertices
  std::size_t random_count = 0;
  std::size_t random_min_order = 10;
  std::size_t random_max_order = 14;
  double probability = 0.5;
  std::uint64_t seed = 1;
  std::size_t workers = 1;
  std::optional<std::size_t> tau_override;
};

/// Agreement counts and trace maxima for one (P, Q) pair.
struct PairReport {
  std::string p_spec;
  std::string q_spec;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t tau = 0;
  std::uint64_t graphs = 0;
  std::uint64_t agreements = 0;
  std::uint64_t members = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t bound_violations = 0;
  std::size_t max_step2_iterations = 0;
  std::size_t max_step2_peak = 0;
  std::size_t max_step3 = 0;
  std::vector<std::string> disagreement_samples;  // graph6
  std::vector<std::string> violation_samples;     // graph6
  double seconds = 0;

  bool ok() const noexcept { return disagreements == 0 && bound_violations == 0 && agreements == graphs; }

  void merge(const PairReport& o) {
    graphs += o.graphs;
    agreements += o.agreements;
    members += o.members;
    disagreements += o.disagreements;
    bound_violations += o.bound_violations;
    max_step2_iterations = std::max(max_step2_iterations, o.max_step2_iterations);
    max_step2_peak = std::max(max_step2_peak, o.max_step2_peak);
    max_step3 = std::max(max_step3, o.max_step3);
    for (const auto& s : o.disagreement_samples)
      if (disagreement_samples.size() < kSamples) disagreement_samples.push_back(s);
    for (const auto& s : o.violation_samples)
      if (violation_samples.size() < kSamples) violation_samples.push_back(s);
  }

  static constexpr std::size_t kSamples = 10;
};

inline Json to_json(const PairReport& r) {
  return Json{{"p_spec", r.p_spec},
              {"q_spec", r.q_spec},
              {"n", r.n},
              {"m", r.m},
              {"tau", r.tau},
              {"graphs", r.graphs},
              {"agreements", r.agreements},
              {"members", r.members},
              {"disagreements", r.disagreements},
              {"bound_violations", r.bound_violations},
              {"max_step2_iterations", r.max_step2_iterations},
              {"max_step2_peak_candidates", r.max_step2_peak},
              {"max_step3_candidates", r.max_step3},
              {"disagreement_samples", r.disagreement_samples},
              {"violation_samples", r.violation_samples},
              {"seconds", r.seconds},
              {"ok", r.ok()}};
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// The i-th graph of the seeded random battery.
inline Graph sweep_random_graph(const SweepConfig& config, std::size_t i) {
  std::uint64_t h = detail::splitmix64(config.seed ^ detail::splitmix64(i));
  std::size_t span = config.random_max_order - config.random_min_order + 1;
  std::size_t order = config.random_min_order + static_cast<std::size_t>(h % span);
  return random_graph(order, config.probability, detail::splitmix64(h));
}

/// Compares Algorithm A with the brute-force oracle on one graph and checks
/// the trace against the loop bound and the closed-form candidate bounds.
inline void sweep_one(const Graph& g, const PropertySpec& p_spec, const PropertySpec& q_spec,
                      const RecognizeOptions& options, PairReport& report) {
  const std::size_t p = g.order();
  Decision fast = recognize(g, p_spec, q_spec, options);
  Decision slow = brute_force(g, p_spec, q_spec);
  ++report.graphs;
  if (fast.member == slow.member) {
    ++report.agreements;
    if (fast.member) ++report.members;
  } else {
    ++report.disagreements;
    if (report.disagreement_samples.size() < PairReport::kSamples) report.disagreement_samples.push_back(emit_graph6(g));
  }
  const auto& t = fast.trace;
  report.max_step2_iterations = std::max(report.max_step2_iterations, t.step2_iterations);
  report.max_step2_peak = std::max(report.max_step2_peak, t.step2_peak_candidates);
  report.max_step3 = std::max(report.max_step3, t.step3_candidates_examined);
  bool within = t.step2_iterations <= p && t.step2_peak_candidates <= step2_round_bound(p, t.tau_used) &&
                t.step2_candidates_examined <= (t.step2_iterations + 1) * step2_round_bound(p, t.tau_used) &&
                t.step3_candidates_examined <= step3_bound(p, t.tau_used);
  if (!within) {
    ++report.bound_violations;
    if (report.violation_samples.size() < PairReport::kSamples) report.violation_samples.push_back(emit_graph6(g));
  }
}

/// Oracle-equivalence sweep for one pair: every labeled graph on 0..p_max
/// vertices, then `random_count` seeded random graphs. Throws
/// InapplicableError when Algorithm A does not apply to the pair.
inline PairReport run_sweep(const PropertySpec& p_spec, const PropertySpec& q_spec, const SweepConfig& config) {
  if (config.p_max > kMaxEnumerationOrder)
    throw LimitError("exhaustive sweeps are limited to order " + std::to_string(kMaxEnumerationOrder));
  if (config.random_count > 0 &&
      (config.random_min_order > config.random_max_order || config.random_max_order > kBruteForceLimit))
    throw InvalidArgument("random battery orders must satisfy min <= max <= " + std::to_string(kBruteForceLimit));

  auto start = std::chrono::steady_clock::now();
  PairReport total;
  total.p_spec = p_spec.to_string();
  total.q_spec = q_spec.to_string();
  auto n = clique_bound(p_spec);
  auto m = co_clique_bound(q_spec);
  if (!n.bounded()) throw InapplicableError("unbounded clique bound for P = " + total.p_spec);
  if (!m.bounded()) throw InapplicableError("unbounded co-clique bound for Q = " + total.q_spec);
  total.n = *n.n;
  total.m = *m.n;
  total.tau = config.tau_override.value_or(tau(total.m, total.n).tau);

  RecognizeOptions options;
  options.clique_bound_override = total.n;
  options.co_clique_bound_override = total.m;
  options.tau_override = total.tau;

  const std::size_t workers = std::max<std::size_t>(1, config.workers);
  std::vector<PairReport> partial(workers);
  auto run_worker = [&](std::size_t w) {
    PairReport& r = partial[w];
    for (std::size_t p = 0; p <= config.p_max; ++p) {
      std::uint64_t count = labeled_graph_count(p);
      for_each_labeled_graph(p, count * w / workers, count * (w + 1) / workers,
                             [&](const Graph& g) { sweep_one(g, p_spec, q_spec, options, r); });
    }
    for (std::size_t i = w; i < config.random_count; i += workers)
      sweep_one(sweep_random_graph(config, i), p_spec, q_spec, options, r);
  };
  if (workers == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& r : partial) total.merge(r);
  total.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

}  // namespace gencol
