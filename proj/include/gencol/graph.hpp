#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <random>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "gencol/error.hpp"
#include "gencol/vertex_set.hpp"

namespace gencol {

using Edge = std::pair<Vertex, Vertex>;

class GraphBuilder;

/// Finite simple graph on vertices 0..order-1 with a bit-packed adjacency row
/// per vertex. Immutable once built; use GraphBuilder or the free functions
/// below to obtain new graphs.
class Graph {
 public:
  static constexpr std::size_t kMaxOrder = 4096;

  Graph() = default;

  /// Edgeless graph on `order` vertices.
  explicit Graph(std::size_t order) : rows_(check_order(order), VertexSet(order)) {}

  std::size_t order() const noexcept { return rows_.size(); }

  bool adjacent(Vertex u, Vertex v) const noexcept { return u < order() && rows_[u].contains(v); }

  const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  VertexSet vertices() const { return VertexSet::full(order()); }

  std::size_t edge_count() const noexcept {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.size();
    return twice / 2;
  }

  /// Edges as (u, v) with u < v, sorted ascending.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v = rows_[u].next(u + 1); v < order(); v = rows_[u].next(v + 1)) out.emplace_back(u, v);
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept { return a.rows_ == b.rows_; }

 private:
  friend class GraphBuilder;

  static std::size_t check_order(std::size_t order) {
    if (order > kMaxOrder)
      throw InvalidArgument("graph order " + std::to_string(order) + " exceeds the cap of " +
                            std::to_string(kMaxOrder));
    return order;
  }

  std::vector<VertexSet> rows_;
};

/// Mutable staging area for a Graph. Validates every edge as it is added.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order) : graph_(order) {}
  explicit GraphBuilder(Graph start) : graph_(std::move(start)) {}

  std::size_t order() const noexcept { return graph_.order(); }

  GraphBuilder& add_edge(Vertex u, Vertex v) {
    validate(u, v);
    graph_.rows_[u].insert(v);
    graph_.rows_[v].insert(u);
    return *this;
  }

  GraphBuilder& remove_edge(Vertex u, Vertex v) {
    validate(u, v);
    graph_.rows_[u].erase(v);
    graph_.rows_[v].erase(u);
    return *this;
  }

  bool adjacent(Vertex u, Vertex v) const noexcept { return graph_.adjacent(u, v); }

  Graph build() && { return std::move(graph_); }
  Graph build() const& { return graph_; }

 private:
  void validate(Vertex u, Vertex v) const {
    auto pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
    if (u >= order() || v >= order())
      throw InvalidArgument("edge " + pair + " has an endpoint outside 0.." +
                            (order() == 0 ? std::string("(empty)") : std::to_string(order() - 1)));
    if (u == v) throw InvalidArgument("edge " + pair + " is a loop");
  }

  Graph graph_;
};

inline Graph build_graph(std::size_t order, std::span<const Edge> edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph build_graph(std::size_t order, std::initializer_list<Edge> edges) {
  return build_graph(order, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) b.add_edge(u, v);
  return std::move(b).build();
}

/// Subgraph induced by `s`, relabeled so that the i-th smallest member of `s` becomes vertex i.
inline Graph induced(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw InvalidArgument("vertex set over " + std::to_string(s.universe()) + " vertices used with a graph of order " +
                          std::to_string(g.order()));
  auto members = s.to_vector();
  GraphBuilder b(members.size());
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j)
      if (g.adjacent(members[i], members[j])) b.add_edge(i, j);
  return std::move(b).build();
}

/// g1 followed by g2, with g2's vertices shifted by order(g1) and no edges between them.
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::size_t shift = g1.order();
  if (shift + g2.order() > Graph::kMaxOrder)
    throw InvalidArgument("disjoint union of orders " + std::to_string(shift) + " and " + std::to_string(g2.order()) +
                          " exceeds the cap of " + std::to_string(Graph::kMaxOrder));
  GraphBuilder b(shift + g2.order());
  for (auto [u, v] : g1.edges()) b.add_edge(u, v);
  for (auto [u, v] : g2.edges()) b.add_edge(u + shift, v + shift);
  return std::move(b).build();
}

/// Adds vertex `order(g)` adjacent to every existing vertex.
inline Graph add_universal_vertex(const Graph& g) {
  if (g.order() + 1 > Graph::kMaxOrder)
    throw InvalidArgument("adding a vertex would exceed the cap of " + std::to_string(Graph::kMaxOrder));
  GraphBuilder b(g.order() + 1);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (Vertex v = 0; v < g.order(); ++v) b.add_edge(v, g.order());
  return std::move(b).build();
}

inline std::size_t component_count(const Graph& g) {
  VertexSet seen(g.order());
  std::size_t components = 0;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen.contains(start)) continue;
    ++components;
    std::vector<Vertex> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v) - seen) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return components;
}

// ---------------------------------------------------------------------------
// Standard families

inline Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

inline Graph empty_graph(std::size_t n) { return Graph(n); }

inline Graph path_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v) b.add_edge(v - 1, v);
  return std::move(b).build();
}

inline Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices, got " + std::to_string(n));
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build();
}

/// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other.
inline Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  GraphBuilder gb(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) gb.add_edge(u, v);
  return std::move(gb).build();
}

/// G(n, prob). Each pair u < v, visited in the same order as graph6 bits, draws
/// one 64-bit word from mt19937_64 seeded with `seed`; the result is identical
/// across platforms and standard libraries.
inline Graph random_graph(std::size_t n, double prob, std::uint64_t seed) {
  if (!(prob >= 0.0 && prob <= 1.0)) throw InvalidArgument("edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  GraphBuilder b(n);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) {
      double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (x < prob) b.add_edge(u, v);
    }
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// Exhaustive enumeration and brute-force canonical forms (small orders only)

inline constexpr std::size_t kMaxEnumerationOrder = 8;
inline constexpr std::size_t kMaxCanonicalOrder = 8;

inline std::size_t pair_count(std::size_t p) noexcept { return p * (p - (p > 0 ? 1 : 0)) / 2; }

/// Graph whose edge set is given by the bits of `mask`; bit k is the k-th pair in
/// the order (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
inline Graph graph_from_edge_mask(std::size_t p, std::uint64_t mask) {
  if (pair_count(p) > 64) throw LimitError("edge masks cover graphs of order at most 11");
  GraphBuilder b(p);
  std::size_t bit = 0;
  for (Vertex v = 1; v < p; ++v)
    for (Vertex u = 0; u < v; ++u, ++bit)
      if ((mask >> bit) & 1u) b.add_edge(u, v);
  return std::move(b).build();
}

inline std::uint64_t edge_mask(const Graph& g) {
  if (pair_count(g.order()) > 64) throw LimitError("edge masks cover graphs of order at most 11");
  std::uint64_t mask = 0;
  std::size_t bit = 0;
  for (Vertex v = 1; v < g.order(); ++v)
    for (Vertex u = 0; u < v; ++u, ++bit)
      if (g.adjacent(u, v)) mask |= std::uint64_t{1} << bit;
  return mask;
}

inline std::uint64_t labeled_graph_count(std::size_t p) {
  if (p > kMaxEnumerationOrder)
    throw LimitError("labeled enumeration is capped at order " + std::to_string(kMaxEnumerationOrder));
  return std::uint64_t{1} << pair_count(p);
}

/// Calls `visit` on every labeled graph on p vertices whose edge mask lies in
/// [first, last), in ascending mask order. `visit` may return false to stop early.
template <typename Visitor>
void for_each_labeled_graph(std::size_t p, std::uint64_t first, std::uint64_t last, Visitor&& visit) {
  std::uint64_t total = labeled_graph_count(p);
  last = std::min(last, total);
  for (std::uint64_t mask = first; mask < last; ++mask) {
    Graph g = graph_from_edge_mask(p, mask);
    if constexpr (std::is_same_v<std::invoke_result_t<Visitor&, const Graph&>, bool>) {
      if (!visit(static_cast<const Graph&>(g))) return;
    } else {
      visit(static_cast<const Graph&>(g));
    }
  }
}

template <typename Visitor>
void for_each_labeled_graph(std::size_t p, Visitor&& visit) {
  for_each_labeled_graph(p, 0, labeled_graph_count(p), std::forward<Visitor>(visit));
}

/// Relabel g by perm: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw InvalidArgument("permutation size does not match graph order");
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) b.add_edge(perm[u], perm[v]);
  return std::move(b).build();
}

/// Canonical representative of g's isomorphism class: the relabeling with the
/// smallest edge mask, found by trying every permutation.
inline Graph canonical_form(const Graph& g) {
  const std::size_t p = g.order();
  if (p > kMaxCanonicalOrder)
    throw LimitError("brute-force canonical forms are capped at order " + std::to_string(kMaxCanonicalOrder));
  std::vector<Vertex> perm(p);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  auto edges = g.edges();

  // bit index of pair (u,v), u < v, in edge-mask order
  auto bit_of = [](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return b * (b - 1) / 2 + a;
  };
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t mask = 0;
    for (auto [u, v] : edges) mask |= std::uint64_t{1} << bit_of(perm[u], perm[v]);
    best = std::min(best, mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return graph_from_edge_mask(p, best);
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace gencol
