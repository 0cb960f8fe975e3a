#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "gencol/error.hpp"
#include "gencol/graph.hpp"
#include "gencol/graph_view.hpp"
#include "gencol/properties.hpp"
#include "gencol/ramsey.hpp"

namespace gencol {

/// A (P, Q) partition: part_a induces a graph in P, part_rest = V - part_a one in Q.
struct PartitionCertificate {
  VertexSet part_a;
  VertexSet part_rest;
};

/// Work counters for one recognizer run.
struct RecognizerTrace {
  std::size_t step2_iterations = 0;           // successful augmentations B := C
  std::size_t step2_candidates_examined = 0;  // over all step-2 rounds, including the last, failing one
  std::size_t step2_peak_candidates = 0;      // largest single step-2 round
  std::size_t step3_candidates_examined = 0;
  std::size_t tau_used = 0;
  std::size_t membership_checks = 0;
  std::size_t oracle_subsets_examined = 0;  // brute force only
};

enum class Method { algorithm_a, oracle };

struct Decision {
  bool member = false;
  std::optional<PartitionCertificate> certificate;
  RecognizerTrace trace;
  Method method = Method::algorithm_a;
  std::optional<std::size_t> tau;              // absent for the oracle
  std::optional<CliqueBound> clique_bound;     // n for P; Algorithm A only
  std::optional<CliqueBound> co_clique_bound;  // m for Q; Algorithm A only
};

/// True iff both parts satisfy their specs, checked on materialized induced
/// graphs rather than through the views the search used.
inline bool certificate_valid(const Graph& g, const PartitionCertificate& c, const PropertySpec& p_spec,
                              const PropertySpec& q_spec) {
  if (c.part_a.universe() != g.order() || c.part_rest.universe() != g.order()) return false;
  if (c.part_a.intersects(c.part_rest) || !((c.part_a | c.part_rest) == g.vertices())) return false;
  return check(p_spec, induced(g, c.part_a)) && check(q_spec, induced(g, c.part_rest));
}

// ---------------------------------------------------------------------------
// Closed-form candidate bounds

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Bound on one step-2 round: sum over d <= tau of C(p,d) * C(p,d+1).
inline std::uint64_t step2_round_bound(std::size_t p, std::size_t tau) {
  std::uint64_t sum = 0;
  for (std::size_t d = 0; d <= tau; ++d) sum += binomial(p, d) * binomial(p, d + 1);
  return sum;
}

/// Bound on step 3: (sum over d <= tau of C(p,d))^2.
inline std::uint64_t step3_bound(std::size_t p, std::size_t tau) {
  std::uint64_t sum = 0;
  for (std::size_t d = 0; d <= tau; ++d) sum += binomial(p, d);
  return sum * sum;
}

namespace detail {

/// Calls visit(subset) for every k-subset of `items` in ascending lexicographic
/// order of index tuples; stops when visit returns true and reports that.
template <typename Visit>
bool for_each_combination(const std::vector<Vertex>& items, std::size_t k, std::size_t universe, Visit&& visit) {
  if (k > items.size()) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet s(universe);
    for (auto i : idx) s.insert(items[i]);
    if (visit(s)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == items.size() - k + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

/// Step 1: greedy inclusion-wise maximal K_n-free set, scanning vertices in
/// ascending order. v joins B iff B ∩ N(v) has no clique of size n - 1.
inline VertexSet maximal_knfree(const Graph& g, std::size_t n) {
  if (n < 1) throw InvalidArgument("maximal_knfree needs n >= 1");
  GraphView view(g);
  VertexSet b(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (!has_clique(view, b & g.neighbors(v), n - 1)) b.insert(v);
  return b;
}

/// Step 2: first C with |C| = |B| + 1, |B - C| <= tau and G[C] in P. For d = 0..tau,
/// removal sets D ⊆ B with |D| = d, then addition sets E ⊆ V - B with |E| = d + 1,
/// both in lexicographic order; C = (B - D) ∪ E.
inline std::optional<VertexSet> try_augment(const Graph& g, const VertexSet& b, const PropertySpec& p_spec,
                                            std::size_t tau, RecognizerTrace* trace = nullptr) {
  const std::size_t universe = g.order();
  auto inside = b.to_vector();
  auto outside = (~b).to_vector();
  std::optional<VertexSet> found;
  std::size_t examined = 0;
  for (std::size_t d = 0; d <= tau && !found; ++d) {
    detail::for_each_combination(inside, d, universe, [&](const VertexSet& removal) {
      VertexSet kept = b - removal;
      return detail::for_each_combination(outside, d + 1, universe, [&](const VertexSet& addition) {
        ++examined;
        VertexSet c = kept | addition;
        if (check(p_spec, g, c)) {
          found = std::move(c);
          return true;
        }
        return false;
      });
    });
  }
  if (trace) {
    trace->step2_candidates_examined += examined;
    trace->step2_peak_candidates = std::max(trace->step2_peak_candidates, examined);
    trace->membership_checks += examined;
  }
  return found;
}

/// Step 3: first A = (B - D) ∪ E with D ⊆ B, E ⊆ V - B, |D|, |E| <= tau, G[A] in P
/// and G[V - A] in Q. D ranges over sizes 0..tau in lexicographic order, and for
/// each D so does E.
inline std::optional<PartitionCertificate> find_witness(const Graph& g, const VertexSet& b, const PropertySpec& p_spec,
                                                        const PropertySpec& q_spec, std::size_t tau,
                                                        RecognizerTrace* trace = nullptr) {
  const std::size_t universe = g.order();
  auto inside = b.to_vector();
  auto outside = (~b).to_vector();
  std::optional<PartitionCertificate> found;
  std::size_t examined = 0;
  std::size_t checks = 0;
  for (std::size_t d = 0; d <= tau && !found; ++d) {
    detail::for_each_combination(inside, d, universe, [&](const VertexSet& removal) {
      VertexSet kept = b - removal;
      for (std::size_t e = 0; e <= tau; ++e) {
        bool hit = detail::for_each_combination(outside, e, universe, [&](const VertexSet& addition) {
          ++examined;
          VertexSet a = kept | addition;
          ++checks;
          if (!check(p_spec, g, a)) return false;
          VertexSet rest = ~a;
          ++checks;
          if (!check(q_spec, g, rest)) return false;
          found = PartitionCertificate{std::move(a), std::move(rest)};
          return true;
        });
        if (hit) return true;
      }
      return false;
    });
  }
  if (trace) {
    trace->step3_candidates_examined += examined;
    trace->membership_checks += checks;
  }
  return found;
}

struct RecognizeOptions {
  /// Replaces tau(m, n); values below the computed tau may give wrong answers.
  std::optional<std::size_t> tau_override = std::nullopt;
  /// Replace the probed clique bound of P / co-clique bound of Q.
  std::optional<std::size_t> clique_bound_override = std::nullopt;
  std::optional<std::size_t> co_clique_bound_override = std::nullopt;
};

/// Algorithm A. Throws InapplicableError when P has no clique bound or Q no
/// co-clique bound within the probe cap.
inline Decision recognize(const Graph& g, const PropertySpec& p_spec, const PropertySpec& q_spec,
                          const RecognizeOptions& options = {}) {
  Decision out;
  out.method = Method::algorithm_a;
  out.clique_bound = options.clique_bound_override ? CliqueBound{options.clique_bound_override} : clique_bound(p_spec);
  out.co_clique_bound =
      options.co_clique_bound_override ? CliqueBound{options.co_clique_bound_override} : co_clique_bound(q_spec);
  if (!out.clique_bound->bounded())
    throw InapplicableError("unbounded clique bound; use --mode oracle (P = " + p_spec.to_string() + ")");
  if (!out.co_clique_bound->bounded())
    throw InapplicableError("unbounded co-clique bound; use --mode oracle (Q = " + q_spec.to_string() + ")");

  const std::size_t n = *out.clique_bound->n;
  const std::size_t m = *out.co_clique_bound->n;
  const std::size_t t = options.tau_override.value_or(tau(m, n).tau);
  out.tau = t;
  out.trace.tau_used = t;

  VertexSet b = maximal_knfree(g, n);
  while (auto c = try_augment(g, b, p_spec, t, &out.trace)) {
    b = std::move(*c);
    ++out.trace.step2_iterations;
  }
  out.certificate = find_witness(g, b, p_spec, q_spec, t, &out.trace);
  if (out.certificate && !certificate_valid(g, *out.certificate, p_spec, q_spec))
    throw Error("internal error: Algorithm A produced an invalid certificate " + out.certificate->part_a.to_string());
  out.member = out.certificate.has_value();
  return out;
}

/// Largest order accepted by the brute-force oracle.
inline constexpr std::size_t kBruteForceLimit = 24;

struct BruteForceOptions {
  /// Threads splitting the subset-mask range; the smallest valid mask wins either way.
  std::size_t workers = 1;
};

/// Exhaustive oracle: tries every A ⊆ V in ascending mask order (bit i is vertex i).
inline Decision brute_force(const Graph& g, const PropertySpec& p_spec, const PropertySpec& q_spec,
                            const BruteForceOptions& options = {}) {
  const std::size_t p = g.order();
  if (p > kBruteForceLimit)
    throw LimitError("brute force is limited to order " + std::to_string(kBruteForceLimit) + ", got " +
                     std::to_string(p));
  const std::uint64_t total = std::uint64_t{1} << p;

  struct Result {
    std::optional<std::uint64_t> mask;
    std::uint64_t examined = 0;
    std::uint64_t checks = 0;
  };
  auto scan = [&](std::uint64_t first, std::uint64_t last) {
    Result r;
    const VertexSet everything = g.vertices();
    for (std::uint64_t mask = first; mask < last; ++mask) {
      ++r.examined;
      VertexSet a(p);
      for (std::size_t i = 0; i < p; ++i)
        if ((mask >> i) & 1u) a.insert(i);
      ++r.checks;
      if (!check(p_spec, g, a)) continue;
      ++r.checks;
      if (!check(q_spec, g, everything - a)) continue;
      r.mask = mask;
      break;
    }
    return r;
  };

  std::size_t workers = std::max<std::size_t>(1, std::min<std::uint64_t>(options.workers, total));
  std::vector<Result> results(workers);
  if (workers == 1) {
    results[0] = scan(0, total);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] { results[w] = scan(total * w / workers, total * (w + 1) / workers); });
    for (auto& t : pool) t.join();
  }

  Decision out;
  out.method = Method::oracle;
  for (const auto& r : results) {
    out.trace.oracle_subsets_examined += r.examined;
    out.trace.membership_checks += r.checks;
    if (r.mask && !out.certificate) {
      VertexSet a(p);
      for (std::size_t i = 0; i < p; ++i)
        if ((*r.mask >> i) & 1u) a.insert(i);
      out.certificate = PartitionCertificate{a, g.vertices() - a};
    }
  }
  if (out.certificate && !certificate_valid(g, *out.certificate, p_spec, q_spec))
    throw Error("internal error: brute force produced an invalid certificate " + out.certificate->part_a.to_string());
  out.member = out.certificate.has_value();
  return out;
}

}  // namespace gencol
