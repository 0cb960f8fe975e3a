#pragma once

#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gencol/error.hpp"
#include "gencol/graph.hpp"

namespace gencol {

enum class GraphFormat { graph6, edge_list, dimacs };

inline std::string_view format_name(GraphFormat f) {
  switch (f) {
    case GraphFormat::graph6: return "graph6";
    case GraphFormat::edge_list: return "edge_list";
    case GraphFormat::dimacs: return "dimacs";
  }
  return "unknown";
}

inline std::optional<GraphFormat> format_from_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edge_list" || name == "edges" || name == "el") return GraphFormat::edge_list;
  if (name == "dimacs" || name == "col") return GraphFormat::dimacs;
  return std::nullopt;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<std::size_t> parse_index(std::string_view word) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) return std::nullopt;
  return value;
}

// Calls fn(line_number, line) for every line; line numbers are 1-based.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line_no, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// graph6: N(n) header followed by the upper triangle, column by column, packed
// six bits per printable byte (value + 63), most significant bit first.

inline std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
    out.push_back(static_cast<char>((n & 0x3f) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Parses one graph6 string. Leading/trailing whitespace and an optional
/// ">>graph6<<" prefix are ignored. Error positions are byte offsets into the
/// trimmed string.
inline Graph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());

  auto value_at = [&](std::size_t pos) -> int {
    if (pos >= text.size()) throw ParseError("graph6: truncated input at byte " + std::to_string(pos), pos);
    int c = static_cast<unsigned char>(text[pos]);
    if (c < 63 || c > 126)
      throw ParseError("graph6: byte " + std::to_string(pos) + " (value " + std::to_string(c) +
                           ") is outside the printable range 63..126",
                       pos);
    return c - 63;
  };

  if (text.empty()) throw ParseError("graph6: empty input", 0);
  std::size_t pos = 0;
  std::size_t n = 0;
  int first = value_at(pos++);
  if (first < 63) {
    n = static_cast<std::size_t>(first);
  } else {
    if (pos < text.size() && static_cast<unsigned char>(text[pos]) == 126)
      throw ParseError("graph6: 8-byte order header (n > 258047) is not supported", pos);
    for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::size_t>(value_at(pos++));
    if (n > Graph::kMaxOrder)
      throw ParseError("graph6: order " + std::to_string(n) + " exceeds the cap of " + std::to_string(Graph::kMaxOrder),
                       1);
  }

  const std::size_t bits = pair_count(n);
  const std::size_t body_bytes = (bits + 5) / 6;
  if (text.size() < pos + body_bytes)
    throw ParseError("graph6: truncated bit field, expected " + std::to_string(body_bytes) + " bytes after the header but found " +
                         std::to_string(text.size() - pos),
                     text.size());
  if (text.size() > pos + body_bytes)
    throw ParseError("graph6: unexpected trailing data at byte " + std::to_string(pos + body_bytes), pos + body_bytes);

  GraphBuilder b(n);
  std::size_t bit = 0;
  int current = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) current = value_at(pos + bit / 6);
      if ((current >> (5 - bit % 6)) & 1) b.add_edge(i, j);
    }
  return std::move(b).build();
}

// ---------------------------------------------------------------------------
// edge_list: first non-comment line is the vertex count, then one "u v" pair
// per line with 0-based indices. '#' starts a comment. Error positions are
// 1-based line numbers.

inline std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline Graph parse_edge_list(std::string_view text) {
  std::optional<GraphBuilder> builder;
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    auto words = detail::split_words(line);
    if (words.empty()) return;
    auto where = "edge_list line " + std::to_string(line_no) + ": ";
    if (!builder) {
      auto n = words.size() == 1 ? detail::parse_index(words[0]) : std::nullopt;
      if (!n) throw ParseError(where + "expected the vertex count on its own", line_no);
      if (*n > Graph::kMaxOrder)
        throw ParseError(where + "order " + std::to_string(*n) + " exceeds the cap of " + std::to_string(Graph::kMaxOrder),
                         line_no);
      builder.emplace(*n);
      return;
    }
    if (words.size() != 2) throw ParseError(where + "expected \"u v\"", line_no);
    auto u = detail::parse_index(words[0]);
    auto v = detail::parse_index(words[1]);
    if (!u || !v) throw ParseError(where + "vertex indices must be non-negative integers", line_no);
    try {
      builder->add_edge(*u, *v);
    } catch (const InvalidArgument& e) {
      throw ParseError(where + e.what(), line_no);
    }
  });
  if (!builder) throw ParseError("edge_list: missing vertex count header", 1);
  return std::move(*builder).build();
}

// ---------------------------------------------------------------------------
// DIMACS .col: "c" comments, one "p edge n m" line, "e u v" lines with 1-based
// indices. Duplicate edges collapse; m is not cross-checked against the body
// because many published instances list each edge twice.

inline std::string emit_dimacs(const Graph& g) {
  std::string out = "p edge " + std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

inline Graph parse_dimacs(std::string_view text) {
  std::optional<GraphBuilder> builder;
  detail::for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    auto words = detail::split_words(line);
    if (words.empty() || words[0] == "c") return;
    auto where = "dimacs line " + std::to_string(line_no) + ": ";
    if (words[0] == "p") {
      if (builder) throw ParseError(where + "duplicate problem line", line_no);
      if (words.size() != 4 || (words[1] != "edge" && words[1] != "col"))
        throw ParseError(where + "malformed header, expected \"p edge n m\"", line_no);
      auto n = detail::parse_index(words[2]);
      auto m = detail::parse_index(words[3]);
      if (!n || !m) throw ParseError(where + "malformed header counts", line_no);
      if (*n > Graph::kMaxOrder)
        throw ParseError(where + "order " + std::to_string(*n) + " exceeds the cap of " + std::to_string(Graph::kMaxOrder),
                         line_no);
      builder.emplace(*n);
      return;
    }
    if (words[0] == "e") {
      if (!builder) throw ParseError(where + "edge before the \"p edge n m\" header", line_no);
      if (words.size() != 3) throw ParseError(where + "expected \"e u v\"", line_no);
      auto u = detail::parse_index(words[1]);
      auto v = detail::parse_index(words[2]);
      if (!u || !v || *u == 0 || *v == 0)
        throw ParseError(where + "vertex indices must be positive integers (1-based)", line_no);
      try {
        builder->add_edge(*u - 1, *v - 1);
      } catch (const InvalidArgument& e) {
        throw ParseError(where + e.what(), line_no);
      }
      return;
    }
    throw ParseError(where + "unknown line type \"" + std::string(words[0]) + "\"", line_no);
  });
  if (!builder) throw ParseError("dimacs: missing \"p edge n m\" header", 1);
  return std::move(*builder).build();
}

// ---------------------------------------------------------------------------

inline Graph parse_graph(GraphFormat format, std::string_view text) {
  switch (format) {
    case GraphFormat::graph6: return parse_graph6(text);
    case GraphFormat::edge_list: return parse_edge_list(text);
    case GraphFormat::dimacs: return parse_dimacs(text);
  }
  throw InvalidArgument("unknown graph format");
}

/// graph6 output carries a trailing newline so files are line-terminated.
inline std::string emit_graph(GraphFormat format, const Graph& g) {
  switch (format) {
    case GraphFormat::graph6: return emit_graph6(g) + "\n";
    case GraphFormat::edge_list: return emit_edge_list(g);
    case GraphFormat::dimacs: return emit_dimacs(g);
  }
  throw InvalidArgument("unknown graph format");
}

/// Guesses the format from content: DIMACS starts with a "c" or "p" line,
/// an edge list with a bare integer line, anything else is graph6.
inline GraphFormat detect_format(std::string_view text) {
  std::optional<GraphFormat> found;
  detail::for_each_line(text, [&](std::size_t, std::string_view line) {
    if (found) return;
    auto hash = line.find('#');
    auto stripped = detail::trim(hash == std::string_view::npos ? line : line.substr(0, hash));
    if (stripped.empty()) {
      if (hash != std::string_view::npos) found = GraphFormat::edge_list;
      return;
    }
    auto words = detail::split_words(stripped);
    if (words[0] == "c" || words[0] == "p") found = GraphFormat::dimacs;
    else if (words.size() == 1 && detail::parse_index(words[0])) found = GraphFormat::edge_list;
    else found = GraphFormat::graph6;
  });
  return found.value_or(GraphFormat::graph6);
}

}  // namespace gencol
