#pragma once

#include <cstddef>

#include "gencol/graph.hpp"
#include "gencol/vertex_set.hpp"

namespace gencol {

/// Non-owning view of G[members], or of its complement when `complemented` is
/// set. Membership tests run on views so that checking a candidate subset
/// never materializes the induced graph. Vertices keep their labels in the
/// underlying graph.
class GraphView {
 public:
  explicit GraphView(const Graph& g) : graph_(&g), members_(g.vertices()) {}

  GraphView(const Graph& g, VertexSet members, bool complemented = false)
      : graph_(&g), members_(std::move(members)), complemented_(complemented) {
    if (members_.universe() != g.order())
      throw InvalidArgument("view members are over " + std::to_string(members_.universe()) +
                            " vertices but the graph has order " + std::to_string(g.order()));
  }

  const Graph& graph() const noexcept { return *graph_; }
  const VertexSet& members() const noexcept { return members_; }
  bool complemented() const noexcept { return complemented_; }
  std::size_t order() const noexcept { return members_.size(); }

  bool adjacent(Vertex u, Vertex v) const noexcept { return u != v && (graph_->adjacent(u, v) != complemented_); }

  /// Neighbors of v inside the view (v itself is never included).
  VertexSet neighbors(Vertex v) const {
    if (!complemented_) return graph_->neighbors(v) & members_;
    VertexSet r = members_ - graph_->neighbors(v);
    r.erase(v);
    return r;
  }

  GraphView restricted(VertexSet s) const { return GraphView(*graph_, std::move(s) & members_, complemented_); }
  GraphView flipped() const { return GraphView(*graph_, members_, !complemented_); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (Vertex v : members_) twice += neighbors(v).size();
    return twice / 2;
  }

 private:
  const Graph* graph_;
  VertexSet members_;
  bool complemented_ = false;
};

namespace detail {

inline bool has_clique_within(const GraphView& view, VertexSet candidates, std::size_t k) {
  if (k == 0) return true;
  while (candidates.size() >= k) {
    Vertex v = candidates.first();
    candidates.erase(v);
    if (k == 1) return true;
    if (has_clique_within(view, candidates & view.neighbors(v), k - 1)) return true;
  }
  return false;
}

}  // namespace detail

/// True iff the view contains k pairwise adjacent vertices among `candidates`.
inline bool has_clique(const GraphView& view, const VertexSet& candidates, std::size_t k) {
  return detail::has_clique_within(view, candidates & view.members(), k);
}

inline bool has_clique(const GraphView& view, std::size_t k) { return has_clique(view, view.members(), k); }

/// True iff the view contains k pairwise non-adjacent vertices.
inline bool has_independent_set(const GraphView& view, std::size_t k) { return has_clique(view.flipped(), k); }

}  // namespace gencol
