#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "gencol/error.hpp"

namespace gencol {

using Vertex = std::size_t;

/// A subset of the vertices 0..universe-1 of some graph, stored as a bitmask.
///
/// Sets over at most 64 vertices live in a single inline word, so the hot
/// paths of the recognizer and the exhaustive oracles never allocate.
class VertexSet {
 public:
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;

  explicit VertexSet(std::size_t universe) : universe_(universe) {
    if (universe_ > kWordBits) heap_.assign(word_count(universe_), 0);
  }

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
      : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    auto w = s.mutable_words();
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  /// Members are the set bits of `mask`; requires universe <= 64.
  static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
    if (universe > kWordBits) throw InvalidArgument("from_mask needs a universe of at most 64 vertices");
    VertexSet s(universe);
    s.inline_ = mask;
    s.trim();
    return s;
  }

  template <typename Range>
  static VertexSet from_range(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  std::span<const std::uint64_t> words() const noexcept {
    if (universe_ <= kWordBits) return {&inline_, universe_ == 0 ? 0u : 1u};
    return heap_;
  }

  std::span<std::uint64_t> mutable_words() noexcept {
    if (universe_ <= kWordBits) return {&inline_, universe_ == 0 ? 0u : 1u};
    return heap_;
  }

  /// Low word of the mask; the whole set when universe <= 64.
  std::uint64_t low_word() const noexcept { return universe_ <= kWordBits ? inline_ : heap_.front(); }

  bool contains(Vertex v) const noexcept {
    if (v >= universe_) return false;
    return (words()[v / kWordBits] >> (v % kWordBits)) & 1u;
  }

  void insert(Vertex v) {
    check_member(v);
    mutable_words()[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  }

  void erase(Vertex v) {
    check_member(v);
    mutable_words()[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
  }

  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words()) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool empty() const noexcept {
    for (auto w : words())
      if (w != 0) return false;
    return true;
  }

  /// Smallest member, or universe() when empty.
  Vertex first() const noexcept { return next(0); }

  /// Smallest member >= from, or universe() when there is none.
  Vertex next(Vertex from) const noexcept {
    auto w = words();
    std::size_t i = from / kWordBits;
    if (i >= w.size()) return universe_;
    std::uint64_t cur = w[i] & (~std::uint64_t{0} << (from % kWordBits));
    while (true) {
      if (cur != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(cur));
      if (++i == w.size()) return universe_;
      cur = w[i];
    }
  }

  bool is_subset_of(const VertexSet& other) const {
    same_universe(other);
    auto a = words();
    auto b = other.words();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] & ~b[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& other) const {
    same_universe(other);
    auto a = words();
    auto b = other.words();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] & b[i]) return true;
    return false;
  }

  VertexSet& operator&=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a & b; }); }
  VertexSet& operator|=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a | b; }); }
  VertexSet& operator-=(const VertexSet& o) { return combine(o, [](auto a, auto b) { return a & ~b; }); }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Complement relative to the universe.
  VertexSet operator~() const {
    VertexSet r = *this;
    for (auto& w : r.mutable_words()) w = ~w;
    r.trim();
    return r;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    if (a.universe_ != b.universe_) return false;
    auto x = a.words();
    auto y = b.words();
    return std::equal(x.begin(), x.end(), y.begin(), y.end());
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for (Vertex v : *this) out.push_back(v);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_member = true;
    for (Vertex v : *this) {
      if (!first_member) s += ',';
      s += std::to_string(v);
      first_member = false;
    }
    return s + "}";
  }

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}

    Vertex operator*() const noexcept { return at_; }
    const_iterator& operator++() noexcept {
      at_ = set_->next(at_ + 1);
      return *this;
    }
    const_iterator operator++(int) noexcept {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) noexcept { return a.at_ == b.at_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = 0;
  };

  const_iterator begin() const noexcept { return {this, first()}; }
  const_iterator end() const noexcept { return {this, universe_}; }

 private:
  static std::size_t word_count(std::size_t universe) noexcept { return (universe + kWordBits - 1) / kWordBits; }

  void check_member(Vertex v) const {
    if (v >= universe_)
      throw InvalidArgument("vertex " + std::to_string(v) + " outside a set over " + std::to_string(universe_) +
                            " vertices");
  }

  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_)
      throw InvalidArgument("vertex sets over different universes (" + std::to_string(universe_) + " vs " +
                            std::to_string(o.universe_) + ")");
  }

  template <typename Op>
  VertexSet& combine(const VertexSet& o, Op op) {
    same_universe(o);
    auto a = mutable_words();
    auto b = o.words();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = op(a[i], b[i]);
    return *this;
  }

  // Clears bits at positions >= universe in the last word.
  void trim() noexcept {
    auto w = mutable_words();
    if (w.empty()) return;
    std::size_t tail = universe_ % kWordBits;
    if (tail != 0) w.back() &= (std::uint64_t{1} << tail) - 1;
  }

  std::size_t universe_ = 0;
  std::uint64_t inline_ = 0;
  std::vector<std::uint64_t> heap_;
};

}  // namespace gencol
