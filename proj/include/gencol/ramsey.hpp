#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "gencol/error.hpp"
#include "gencol/graph.hpp"

namespace gencol {

/// tau(m, n): every graph on more than tau vertices has an independent set of
/// size m or a clique of size n. `exact` marks tau = R(m,n) - 1 exactly; an
/// inexact value is an upper bound from the Ramsey recurrence.
struct RamseyBound {
  std::size_t m = 1;
  std::size_t n = 1;
  std::size_t tau = 0;
  bool exact = false;

  friend bool operator==(const RamseyBound&, const RamseyBound&) = default;
};

namespace detail {

// Known Ramsey numbers R(m,n) with 3 <= m <= n; the trivial rows m <= 2 are
// handled separately.
inline std::optional<std::size_t> exact_ramsey(std::size_t m, std::size_t n) {
  if (m > n) std::swap(m, n);
  if (m == 1) return 1;
  if (m == 2) return n;
  if (m == 3 && n == 3) return 6;
  if (m == 3 && n == 4) return 9;
  if (m == 3 && n == 5) return 14;
  if (m == 4 && n == 4) return 18;
  return std::nullopt;
}

// Upper bound on R(m,n): exact where tabulated, else R(m-1,n) + R(m,n-1).
inline std::size_t ramsey_upper(std::size_t m, std::size_t n, std::map<std::pair<std::size_t, std::size_t>, std::size_t>& memo) {
  if (auto e = exact_ramsey(m, n)) return *e;
  auto key = std::minmax(m, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::size_t r = ramsey_upper(m - 1, n, memo) + ramsey_upper(m, n - 1, memo);
  memo[key] = r;
  return r;
}

}  // namespace detail

inline RamseyBound tau(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw InvalidArgument("tau needs m, n >= 1");
  if (auto e = detail::exact_ramsey(m, n)) return {m, n, *e - 1, true};
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> memo;
  return {m, n, detail::ramsey_upper(m, n, memo) - 1, false};
}

/// Largest t + 1 for which verify_tau enumerates all labeled graphs.
inline constexpr std::size_t kRamseyVerifyOrder = 8;

namespace detail {

// back[v] holds the neighbors of v with smaller index. A clique's largest
// vertex sees every other member through its back row, so these rows suffice.
using BackRows = std::array<std::uint8_t, kRamseyVerifyOrder>;

inline bool small_has_clique(const BackRows& back, std::uint8_t candidates, std::size_t k) {
  if (k == 0) return true;
  while (static_cast<std::size_t>(std::popcount(candidates)) >= k) {
    int top = 7 - std::countl_zero(candidates);
    candidates &= static_cast<std::uint8_t>(~(1u << top));
    if (k == 1 || small_has_clique(back, candidates & back[top], k - 1)) return true;
  }
  return false;
}

}  // namespace detail

/// True iff every labeled graph on t+1 vertices contains an independent set of
/// size m or a clique of size n. Exhaustive over 2^C(t+1,2) edge masks.
inline bool verify_tau(std::size_t m, std::size_t n, std::size_t t) {
  const std::size_t p = t + 1;
  if (p > kRamseyVerifyOrder)
    throw LimitError("verify_tau enumerates graphs on at most " + std::to_string(kRamseyVerifyOrder) +
                     " vertices; t = " + std::to_string(t) + " needs " + std::to_string(p));
  const std::uint8_t all = static_cast<std::uint8_t>((1u << p) - 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(p)); ++mask) {
    detail::BackRows back{};
    detail::BackRows co_back{};
    // Edge-mask bits for pairs (u, v), u < v, are contiguous per v.
    for (std::size_t v = 1; v < p; ++v) {
      auto lower = static_cast<std::uint8_t>((1u << v) - 1);
      back[v] = static_cast<std::uint8_t>((mask >> (v * (v - 1) / 2)) & lower);
      co_back[v] = static_cast<std::uint8_t>(~back[v] & lower);
    }
    if (!detail::small_has_clique(back, all, n) && !detail::small_has_clique(co_back, all, m)) return false;
  }
  return true;
}

}  // namespace gencol
