#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gencol/error.hpp"
#include "gencol/formats.hpp"
#include "gencol/graph.hpp"
#include "gencol/graph_view.hpp"

namespace gencol {

enum class PropertyKind {
  edgeless,
  complete,
  cluster,                // Free(P3)
  complete_multipartite,  // Free(co-P3)
  bipartite,
  co_bipartite,
  complete_bipartite,
  free_of,
  complement_of,
  product_of,
};

/// A forbidden induced subgraph together with its canonical textual atom
/// ("K3", "Kbar2", "P4", "C5", "2K2" or "g6:<graph6>").
struct ForbiddenGraph {
  Graph graph;
  std::string label;
  /// Pattern vertex order used by the matcher: each vertex after the first
  /// has as many already-placed neighbors as possible.
  std::vector<Vertex> search_order;
};

/// Names the small graphs the property-spec grammar has atoms for; everything else is
/// written as graph6 of its canonical form (or of the graph itself when it is
/// too large for brute-force canonical forms).
inline std::string describe_forbidden(const Graph& h) {
  const std::size_t k = h.order();
  const std::size_t e = h.edge_count();
  if (e == pair_count(k)) return "K" + std::to_string(k);
  if (e == 0) return "Kbar" + std::to_string(k);
  if (k <= kMaxCanonicalOrder) {
    if (k >= 3 && e == k - 1 && are_isomorphic(h, path_graph(k))) return "P" + std::to_string(k);
    if (k >= 4 && e == k && are_isomorphic(h, cycle_graph(k))) return "C" + std::to_string(k);
    if (k == 4 && e == 2 && are_isomorphic(h, disjoint_union(complete_graph(2), complete_graph(2)))) return "2K2";
    return "g6:" + emit_graph6(canonical_form(h));
  }
  return "g6:" + emit_graph6(h);
}

inline ForbiddenGraph make_forbidden(Graph h) {
  if (h.order() == 0) throw InvalidArgument("forbidden graphs must have at least one vertex");
  ForbiddenGraph f{h, describe_forbidden(h), {}};
  const std::size_t k = h.order();
  std::vector<bool> placed(k, false);
  for (std::size_t step = 0; step < k; ++step) {
    Vertex best = k;
    std::size_t best_links = 0;
    for (Vertex v = 0; v < k; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (Vertex u : f.search_order) links += h.adjacent(u, v) ? 1 : 0;
      if (best == k || links > best_links || (links == best_links && h.degree(v) > h.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = true;
    f.search_order.push_back(best);
  }
  return f;
}

/// Declarative description of a hereditary graph class. Values are kept in a
/// normal form: co(co(x)) collapses to x, forbidden lists are sorted by label
/// and deduplicated, and nested products are flattened. Two specs compare
/// equal iff their canonical texts agree.
class PropertySpec {
 public:
  static PropertySpec builtin(PropertyKind kind) {
    if (kind == PropertyKind::free_of || kind == PropertyKind::complement_of || kind == PropertyKind::product_of)
      throw InvalidArgument("builtin() takes a named class, not a combinator");
    PropertySpec s;
    s.kind_ = kind;
    return s;
  }

  static PropertySpec free_of(std::vector<Graph> forbidden) {
    if (forbidden.empty()) throw InvalidArgument("free() needs at least one forbidden graph");
    PropertySpec s;
    s.kind_ = PropertyKind::free_of;
    for (auto& h : forbidden) s.forbidden_.push_back(make_forbidden(std::move(h)));
    std::sort(s.forbidden_.begin(), s.forbidden_.end(),
              [](const ForbiddenGraph& a, const ForbiddenGraph& b) { return a.label < b.label; });
    s.forbidden_.erase(std::unique(s.forbidden_.begin(), s.forbidden_.end(),
                                   [](const ForbiddenGraph& a, const ForbiddenGraph& b) { return a.label == b.label; }),
                       s.forbidden_.end());
    return s;
  }

  static PropertySpec complement_of(PropertySpec inner) {
    if (inner.kind_ == PropertyKind::complement_of) return std::move(inner.operands_.front());
    PropertySpec s;
    s.kind_ = PropertyKind::complement_of;
    s.operands_.push_back(std::move(inner));
    return s;
  }

  static PropertySpec product_of(std::vector<PropertySpec> factors) {
    PropertySpec s;
    s.kind_ = PropertyKind::product_of;
    for (auto& f : factors) {
      if (f.kind_ == PropertyKind::product_of)
        for (auto& g : f.operands_) s.operands_.push_back(std::move(g));
      else
        s.operands_.push_back(std::move(f));
    }
    if (s.operands_.size() < 2) throw InvalidArgument("a product needs at least two factors");
    return s;
  }

  PropertyKind kind() const noexcept { return kind_; }
  const std::vector<ForbiddenGraph>& forbidden() const noexcept { return forbidden_; }
  const std::vector<PropertySpec>& operands() const noexcept { return operands_; }

  /// Canonical text; parse_spec(to_string()) reproduces the spec.
  std::string to_string() const {
    switch (kind_) {
      case PropertyKind::edgeless: return "edgeless";
      case PropertyKind::complete: return "complete";
      case PropertyKind::cluster: return "cluster";
      case PropertyKind::complete_multipartite: return "complete_multipartite";
      case PropertyKind::bipartite: return "bipartite";
      case PropertyKind::co_bipartite: return "co_bipartite";
      case PropertyKind::complete_bipartite: return "complete_bipartite";
      case PropertyKind::free_of: {
        std::string out = "free(";
        for (std::size_t i = 0; i < forbidden_.size(); ++i) out += (i ? "," : "") + forbidden_[i].label;
        return out + ")";
      }
      case PropertyKind::complement_of: return "co(" + operands_.front().to_string() + ")";
      case PropertyKind::product_of: {
        std::string out;
        for (std::size_t i = 0; i < operands_.size(); ++i) out += (i ? "∘" : "") + operands_[i].to_string();
        return out;
      }
    }
    return "?";
  }

  friend bool operator==(const PropertySpec& a, const PropertySpec& b) { return a.to_string() == b.to_string(); }

 private:
  PropertySpec() = default;

  PropertyKind kind_ = PropertyKind::edgeless;
  std::vector<ForbiddenGraph> forbidden_;
  std::vector<PropertySpec> operands_;
};

namespace specs {
inline PropertySpec edgeless() { return PropertySpec::builtin(PropertyKind::edgeless); }
inline PropertySpec complete() { return PropertySpec::builtin(PropertyKind::complete); }
inline PropertySpec cluster() { return PropertySpec::builtin(PropertyKind::cluster); }
inline PropertySpec complete_multipartite() { return PropertySpec::builtin(PropertyKind::complete_multipartite); }
inline PropertySpec bipartite() { return PropertySpec::builtin(PropertyKind::bipartite); }
inline PropertySpec co_bipartite() { return PropertySpec::builtin(PropertyKind::co_bipartite); }
inline PropertySpec complete_bipartite() { return PropertySpec::builtin(PropertyKind::complete_bipartite); }
inline PropertySpec free_of(std::vector<Graph> forbidden) { return PropertySpec::free_of(std::move(forbidden)); }
inline PropertySpec co(PropertySpec s) { return PropertySpec::complement_of(std::move(s)); }
inline PropertySpec product(std::vector<PropertySpec> factors) { return PropertySpec::product_of(std::move(factors)); }
}  // namespace specs

// ---------------------------------------------------------------------------
// Induced subgraph containment

namespace detail {

inline bool extend_match(const GraphView& view, const Graph& pattern, const std::vector<Vertex>& order,
                         std::vector<Vertex>& image, std::size_t depth, const VertexSet& unused) {
  if (depth == order.size()) return true;
  const Vertex pv = order[depth];
  VertexSet candidates = unused;
  for (std::size_t j = 0; j < depth && !candidates.empty(); ++j) {
    auto nbrs = view.neighbors(image[j]);
    if (pattern.adjacent(order[j], pv))
      candidates &= nbrs;
    else
      candidates -= nbrs;
  }
  for (Vertex gv : candidates) {
    image[depth] = gv;
    VertexSet rest = unused;
    rest.erase(gv);
    if (extend_match(view, pattern, order, image, depth + 1, rest)) return true;
  }
  return false;
}

inline bool contains_forbidden(const GraphView& view, const ForbiddenGraph& f) {
  const Graph& h = f.graph;
  if (h.order() > view.order()) return false;
  std::vector<Vertex> image(h.order());
  return extend_match(view, h, f.search_order, image, 0, view.members());
}

}  // namespace detail

/// True iff the view has an induced subgraph isomorphic to h. Pattern vertices
/// are placed one at a time, each restricted to the vertices whose adjacency
/// to the already-placed images matches the pattern.
inline bool contains_induced(const GraphView& view, const Graph& h) {
  if (h.order() == 0) throw InvalidArgument("contains_induced needs a pattern with at least one vertex");
  if (h.order() > view.order()) return false;
  return detail::contains_forbidden(view, make_forbidden(h));
}

inline bool contains_induced(const Graph& g, const Graph& h) { return contains_induced(GraphView(g), h); }

// ---------------------------------------------------------------------------
// Membership

/// Largest view on which product_of membership is decided by exhaustive partition search.
inline constexpr std::size_t kProductOracleLimit = 20;

bool check(const PropertySpec& spec, const GraphView& view);

namespace detail {

inline bool is_edgeless(const GraphView& view) {
  for (Vertex v : view.members())
    if (!view.neighbors(v).empty()) return false;
  return true;
}

// P3-free iff every edge joins two vertices with equal closed neighborhoods.
inline bool is_cluster(const GraphView& view) {
  for (Vertex v : view.members()) {
    auto nv = view.neighbors(v);
    auto closed_v = nv;
    closed_v.insert(v);
    for (Vertex u : nv) {
      auto closed_u = view.neighbors(u);
      closed_u.insert(u);
      if (!(closed_u == closed_v)) return false;
    }
  }
  return true;
}

// Two-colors the view; returns the color-0 side, or nullopt on an odd cycle.
inline std::optional<VertexSet> two_coloring(const GraphView& view) {
  const auto& members = view.members();
  VertexSet side0(members.universe());
  VertexSet seen(members.universe());
  std::vector<Vertex> stack;
  for (Vertex start : members) {
    if (seen.contains(start)) continue;
    seen.insert(start);
    side0.insert(start);
    stack.push_back(start);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      bool v0 = side0.contains(v);
      for (Vertex w : view.neighbors(v)) {
        if (seen.contains(w)) {
          if (side0.contains(w) == v0) return std::nullopt;
          continue;
        }
        seen.insert(w);
        if (!v0) side0.insert(w);
        stack.push_back(w);
      }
    }
  }
  return side0;
}

inline bool is_bipartite(const GraphView& view) { return two_coloring(view).has_value(); }

// K_{a,b} with a, b >= 0: edgeless, or connected bipartite with every cross pair adjacent.
inline bool is_complete_bipartite(const GraphView& view) {
  if (is_edgeless(view)) return true;
  auto side0 = two_coloring(view);
  if (!side0) return false;
  std::size_t a = side0->size();
  std::size_t b = view.order() - a;
  return view.edge_count() == a * b;
}

inline bool check_product(const std::vector<PropertySpec>& factors, std::size_t index, const GraphView& view) {
  if (index + 1 == factors.size()) return check(factors[index], view);
  auto members = view.members().to_vector();
  const std::size_t k = members.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    VertexSet part(view.members().universe());
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) part.insert(members[i]);
    if (check(factors[index], view.restricted(part)) &&
        check_product(factors, index + 1, view.restricted(view.members() - part)))
      return true;
  }
  return false;
}

}  // namespace detail

inline bool check(const PropertySpec& spec, const GraphView& view) {
  switch (spec.kind()) {
    case PropertyKind::edgeless: return detail::is_edgeless(view);
    case PropertyKind::complete: return detail::is_edgeless(view.flipped());
    case PropertyKind::cluster: return detail::is_cluster(view);
    case PropertyKind::complete_multipartite: return detail::is_cluster(view.flipped());
    case PropertyKind::bipartite: return detail::is_bipartite(view);
    case PropertyKind::co_bipartite: return detail::is_bipartite(view.flipped());
    case PropertyKind::complete_bipartite: return detail::is_complete_bipartite(view);
    case PropertyKind::free_of:
      for (const auto& f : spec.forbidden())
        if (detail::contains_forbidden(view, f)) return false;
      return true;
    case PropertyKind::complement_of: return check(spec.operands().front(), view.flipped());
    case PropertyKind::product_of:
      if (view.order() > kProductOracleLimit)
        throw LimitError("oracle size limit: product membership is decided exhaustively only up to order " +
                         std::to_string(kProductOracleLimit) + ", got " + std::to_string(view.order()));
      return detail::check_product(spec.operands(), 0, view);
  }
  return false;
}

inline bool check(const PropertySpec& spec, const Graph& g) { return check(spec, GraphView(g)); }

/// Membership of G[s] without building the induced graph.
inline bool check(const PropertySpec& spec, const Graph& g, const VertexSet& s) { return check(spec, GraphView(g, s)); }

// ---------------------------------------------------------------------------
// Clique and co-clique bounds

/// Least n with K_n outside the class, probed up to kProbeCap; empty when
/// every probed clique is a member.
struct CliqueBound {
  static constexpr std::size_t kProbeCap = 16;

  std::optional<std::size_t> n;

  bool bounded() const noexcept { return n.has_value(); }
  std::string to_string() const { return n ? std::to_string(*n) : "unbounded"; }
  friend bool operator==(const CliqueBound&, const CliqueBound&) = default;
};

inline CliqueBound clique_bound(const PropertySpec& spec) {
  for (std::size_t i = 1; i <= CliqueBound::kProbeCap; ++i)
    if (!check(spec, complete_graph(i))) return {i};
  return {};
}

inline CliqueBound co_clique_bound(const PropertySpec& spec) {
  for (std::size_t i = 1; i <= CliqueBound::kProbeCap; ++i)
    if (!check(spec, empty_graph(i))) return {i};
  return {};
}

// ---------------------------------------------------------------------------
// Text form
//
//   spec  := unary (("∘" | "*") unary)*
//   unary := NAME | "free(" atom ("," atom)* ")" | "co(" spec ")" | "(" spec ")"
//   atom  := "K"INT | "Kbar"INT | "P"INT | "C"INT | "2K2" | "g6:"GRAPH6

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  PropertySpec parse() {
    auto spec = parse_product();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  static constexpr std::string_view kCircle = "∘";

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("property spec, byte " + std::to_string(pos_) + ": " + what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool eat(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!eat(token)) fail("expected \"" + std::string(token) + "\"");
  }

  std::string_view identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') || text_[pos_] == '_')) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  PropertySpec parse_product() {
    std::vector<PropertySpec> factors;
    factors.push_back(parse_unary());
    while (eat(kCircle) || eat("*")) factors.push_back(parse_unary());
    if (factors.size() == 1) return std::move(factors.front());
    return PropertySpec::product_of(std::move(factors));
  }

  PropertySpec parse_unary() {
    skip_space();
    if (eat("(")) {
      auto inner = parse_product();
      expect(")");
      return inner;
    }
    std::size_t start = pos_;
    auto name = identifier();
    if (name.empty()) fail("expected a property name, free(...), or co(...)");
    if (name == "co" || name == "free") {
      if (!eat("(")) {
        pos_ = start;
        fail("expected \"(\" after \"" + std::string(name) + "\"");
      }
      if (name == "co") {
        auto inner = parse_product();
        expect(")");
        return PropertySpec::complement_of(std::move(inner));
      }
      std::vector<Graph> atoms;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') fail("free() needs at least one forbidden graph");
      do atoms.push_back(parse_atom());
      while (eat(","));
      expect(")");
      return PropertySpec::free_of(std::move(atoms));
    }
    static const std::pair<std::string_view, PropertyKind> kNames[] = {
        {"edgeless", PropertyKind::edgeless},
        {"complete", PropertyKind::complete},
        {"cluster", PropertyKind::cluster},
        {"complete_multipartite", PropertyKind::complete_multipartite},
        {"bipartite", PropertyKind::bipartite},
        {"co_bipartite", PropertyKind::co_bipartite},
        {"complete_bipartite", PropertyKind::complete_bipartite},
    };
    for (auto [n, kind] : kNames)
      if (n == name) return PropertySpec::builtin(kind);
    pos_ = start;
    fail("unknown property name \"" + std::string(name) + "\"");
  }

  std::size_t integer(std::size_t min_value) {
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > Graph::kMaxOrder) fail("atom order exceeds " + std::to_string(Graph::kMaxOrder));
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    if (value < min_value) {
      pos_ = start;
      fail("atom order must be at least " + std::to_string(min_value));
    }
    return value;
  }

  Graph parse_atom() {
    skip_space();
    std::size_t start = pos_;
    if (eat("2K2")) return disjoint_union(complete_graph(2), complete_graph(2));
    if (eat("g6:")) {
      std::size_t body = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')' && text_[pos_] != ' ') ++pos_;
      try {
        auto g = parse_graph6(text_.substr(body, pos_ - body));
        if (g.order() == 0) {
          pos_ = body;
          fail("forbidden graphs must have at least one vertex");
        }
        return g;
      } catch (const ParseError& e) {
        pos_ = body + e.position();
        fail(std::string("bad graph6 atom: ") + e.what());
      }
    }
    if (eat("Kbar")) return empty_graph(integer(1));
    if (eat("K")) return complete_graph(integer(1));
    if (eat("P")) return path_graph(integer(1));
    if (eat("C")) return cycle_graph(integer(3));
    pos_ = start;
    fail("malformed atom; expected K<n>, Kbar<n>, P<n>, C<n>, 2K2 or g6:<graph6>");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline PropertySpec parse_spec(std::string_view text) { return detail::SpecParser(text).parse(); }

}  // namespace gencol
