#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <type_traits>
#include <vector>

#include "gencol/error.hpp"
#include "gencol/graph.hpp"
#include "gencol/properties.hpp"

namespace gencol {

/// G ∪ K3 with no edges between them; G is 3-colorable iff the result is
/// (bipartite, co(cluster))-colorable.
inline Graph t6_gadget(const Graph& g) { return disjoint_union(g, complete_graph(3)); }

/// G plus a universal vertex; G is 3-colorable iff the result is
/// (bipartite, complete_bipartite)-colorable.
inline Graph t7_gadget(const Graph& g) { return add_universal_vertex(g); }

// ---------------------------------------------------------------------------
// k-colorability

inline constexpr std::size_t kColoringLimit = 24;

namespace detail {

inline bool extend_coloring(const Graph& g, std::size_t k, std::vector<std::size_t>& color, Vertex v,
                            std::size_t used) {
  if (v == g.order()) return true;
  // A vertex may open at most one new color, which removes color permutations.
  for (std::size_t c = 0; c < std::min(k, used + 1); ++c) {
    bool clash = false;
    for (Vertex u : g.neighbors(v)) {
      if (u >= v) break;
      if (color[u] == c) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    color[v] = c;
    if (extend_coloring(g, k, color, v + 1, std::max(used, c + 1))) return true;
  }
  return false;
}

}  // namespace detail

inline bool is_k_colorable(const Graph& g, std::size_t k) {
  if (k < 1) throw InvalidArgument("is_k_colorable needs k >= 1");
  if (g.order() > kColoringLimit)
    throw LimitError("k-colorability backtracking is limited to order " + std::to_string(kColoringLimit));
  std::vector<std::size_t> color(g.order(), 0);
  return detail::extend_coloring(g, k, color, 0, 0);
}

// ---------------------------------------------------------------------------
// Partition enumeration and strong uniqueness

struct ColoringPartition {
  std::vector<VertexSet> parts;

  friend bool operator==(const ColoringPartition& a, const ColoringPartition& b) { return a.parts == b.parts; }
};

inline constexpr std::uint64_t kPartitionEnumerationLimit = 10'000'000;

/// Visits every ordered partition (V_1..V_k), empty parts allowed, with
/// G[V_i] in specs[i], in ascending order of the assignment vector
/// (vertex 0 most significant). `visit` may return false to stop.
template <typename Visit>
void for_each_partition(const Graph& g, const std::vector<PropertySpec>& specs, Visit&& visit) {
  const std::size_t k = specs.size();
  const std::size_t p = g.order();
  if (k < 1) throw InvalidArgument("partition enumeration needs at least one spec");
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < p; ++i) {
    if (total > kPartitionEnumerationLimit / k)
      throw LimitError("partition enumeration limited to k^p <= " + std::to_string(kPartitionEnumerationLimit));
    total *= k;
  }
  std::vector<std::size_t> assignment(p, 0);
  for (std::uint64_t index = 0; index < total; ++index) {
    std::uint64_t rest = index;
    for (std::size_t i = p; i-- > 0;) {
      assignment[i] = rest % k;
      rest /= k;
    }
    ColoringPartition part{std::vector<VertexSet>(k, VertexSet(p))};
    for (Vertex v = 0; v < p; ++v) part.parts[assignment[v]].insert(v);
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) ok = check(specs[i], g, part.parts[i]);
    if (!ok) continue;
    if constexpr (std::is_same_v<std::invoke_result_t<Visit&, const ColoringPartition&>, bool>) {
      if (!visit(static_cast<const ColoringPartition&>(part))) return;
    } else {
      visit(static_cast<const ColoringPartition&>(part));
    }
  }
}

inline std::vector<ColoringPartition> enumerate_partitions(const Graph& g, const std::vector<PropertySpec>& specs) {
  std::vector<ColoringPartition> out;
  for_each_partition(g, specs, [&](const ColoringPartition& c) { out.push_back(c); });
  return out;
}

/// Representative of c's class under trivial interchanges: within each group
/// of coordinates carrying equal specs, the parts are sorted.
inline std::vector<std::vector<Vertex>> interchange_normal_form(const ColoringPartition& c,
                                                                const std::vector<PropertySpec>& specs) {
  std::vector<std::vector<Vertex>> parts;
  for (const auto& s : c.parts) parts.push_back(s.to_vector());
  std::vector<bool> done(specs.size(), false);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    if (done[i]) continue;
    std::vector<std::size_t> group;
    for (std::size_t j = i; j < specs.size(); ++j)
      if (!done[j] && specs[j] == specs[i]) {
        group.push_back(j);
        done[j] = true;
      }
    std::vector<std::vector<Vertex>> members;
    for (auto j : group) members.push_back(parts[j]);
    std::sort(members.begin(), members.end());
    for (std::size_t t = 0; t < group.size(); ++t) parts[group[t]] = members[t];
  }
  return parts;
}

/// True iff g has at least one (specs)-partition and all of them coincide up
/// to permuting coordinates whose specs are equal.
inline bool verify_strongly_unique(const Graph& g, const std::vector<PropertySpec>& specs) {
  std::set<std::vector<std::vector<Vertex>>> classes;
  for_each_partition(g, specs, [&](const ColoringPartition& c) {
    classes.insert(interchange_normal_form(c, specs));
    return classes.size() <= 1;
  });
  return classes.size() == 1;
}

// ---------------------------------------------------------------------------
// G_H combinator

/// A host H with its strongly unique partition (U_1..U_n, W_1..W_r): the first
/// `additive_count` parts are the P side, the rest the Q side.
struct UniquePartitionWitness {
  Graph host;
  std::vector<VertexSet> parts;
  std::vector<PropertySpec> specs;
  std::size_t additive_count = 1;
  Vertex anchor = 0;
  VertexSet anchor_w_neighborhood;  // N(anchor) ∩ (W_1 ∪ ... ∪ W_r)
};

inline VertexSet witness_w_side(const UniquePartitionWitness& w) {
  VertexSet side(w.host.order());
  for (std::size_t i = w.additive_count; i < w.parts.size(); ++i) side |= w.parts[i];
  return side;
}

/// Throws InvalidArgument naming the first violated witness invariant.
inline void validate_witness(const UniquePartitionWitness& w) {
  const std::size_t p = w.host.order();
  if (w.parts.size() != w.specs.size())
    throw InvalidArgument("witness: " + std::to_string(w.parts.size()) + " parts but " + std::to_string(w.specs.size()) +
                          " specs");
  if (w.parts.size() < 2) throw InvalidArgument("witness: needs at least two parts");
  if (w.additive_count < 1 || w.additive_count >= w.parts.size())
    throw InvalidArgument("witness: additive_count must leave at least one part on each side");
  VertexSet covered(p);
  for (std::size_t i = 0; i < w.parts.size(); ++i) {
    const auto& part = w.parts[i];
    if (part.universe() != p) throw InvalidArgument("witness: part " + std::to_string(i) + " is over the wrong universe");
    if (part.empty()) throw InvalidArgument("witness: part " + std::to_string(i) + " is empty");
    if (part.intersects(covered)) throw InvalidArgument("witness: part " + std::to_string(i) + " overlaps an earlier part");
    covered |= part;
    if (!check(w.specs[i], w.host, part))
      throw InvalidArgument("witness: part " + std::to_string(i) + " " + part.to_string() + " does not induce a graph in " +
                            w.specs[i].to_string());
  }
  if (!(covered == w.host.vertices())) throw InvalidArgument("witness: parts do not cover the host");
  if (!w.parts.front().contains(w.anchor))
    throw InvalidArgument("witness: anchor " + std::to_string(w.anchor) + " is not in the first part");
  if (!(w.anchor_w_neighborhood == (w.host.neighbors(w.anchor) & witness_w_side(w))))
    throw InvalidArgument("witness: anchor_w_neighborhood differs from N(anchor) ∩ W");
}

/// Builds a witness, deriving N_W(anchor). The result is validated.
inline UniquePartitionWitness make_witness(Graph host, std::vector<VertexSet> parts, std::vector<PropertySpec> specs,
                                           std::size_t additive_count, Vertex anchor) {
  UniquePartitionWitness w{std::move(host), std::move(parts), std::move(specs), additive_count, anchor, {}};
  if (anchor >= w.host.order()) throw InvalidArgument("witness: anchor " + std::to_string(anchor) + " out of range");
  if (additive_count >= 1 && additive_count < w.parts.size() && w.parts.size() == w.specs.size()) {
    bool universes_ok = std::all_of(w.parts.begin(), w.parts.end(),
                                    [&](const VertexSet& s) { return s.universe() == w.host.order(); });
    if (universes_ok) w.anchor_w_neighborhood = w.host.neighbors(anchor) & witness_w_side(w);
  }
  validate_witness(w);
  return w;
}

/// P = specs[0] ∘ ... ∘ specs[additive_count-1] (a single spec stays unwrapped).
inline PropertySpec witness_p_spec(const UniquePartitionWitness& w) {
  std::vector<PropertySpec> f(w.specs.begin(), w.specs.begin() + static_cast<std::ptrdiff_t>(w.additive_count));
  return f.size() == 1 ? f.front() : PropertySpec::product_of(std::move(f));
}

inline PropertySpec witness_q_spec(const UniquePartitionWitness& w) {
  std::vector<PropertySpec> f(w.specs.begin() + static_cast<std::ptrdiff_t>(w.additive_count), w.specs.end());
  return f.size() == 1 ? f.front() : PropertySpec::product_of(std::move(f));
}

/// Disjoint copies of G (vertices 0..p_G-1) and H (shifted by p_G), plus every
/// edge between V(G) and the copy of N_W(anchor).
inline Graph gh_combinator(const Graph& g, const UniquePartitionWitness& w) {
  validate_witness(w);
  GraphBuilder b(disjoint_union(g, w.host));
  const std::size_t shift = g.order();
  for (Vertex v = 0; v < g.order(); ++v)
    for (Vertex x : w.anchor_w_neighborhood) b.add_edge(v, x + shift);
  return std::move(b).build();
}

/// Exhaustive search for strongly uniquely (specs)-partitionable hosts on
/// 1..max_order vertices whose unique partition has no empty part. One host
/// per isomorphism class (the canonical form); anchor is the smallest vertex
/// of the first part.
inline std::vector<UniquePartitionWitness> find_unique_witnesses(const std::vector<PropertySpec>& specs,
                                                                 std::size_t additive_count, std::size_t max_order) {
  if (max_order > kMaxCanonicalOrder)
    throw LimitError("witness search is limited to hosts on at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
  std::vector<UniquePartitionWitness> found;
  for (std::size_t p = 1; p <= max_order; ++p) {
    for_each_labeled_graph(p, [&](const Graph& host) {
      if (!(canonical_form(host) == host)) return;
      std::optional<ColoringPartition> first;
      std::set<std::vector<std::vector<Vertex>>> classes;
      for_each_partition(host, specs, [&](const ColoringPartition& c) {
        if (!first) first = c;
        classes.insert(interchange_normal_form(c, specs));
        return classes.size() <= 1;
      });
      if (classes.size() != 1) return;
      if (std::any_of(first->parts.begin(), first->parts.end(), [](const VertexSet& s) { return s.empty(); })) return;
      found.push_back(make_witness(host, first->parts, specs, additive_count, first->parts.front().first()));
    });
  }
  return found;
}

}  // namespace gencol
