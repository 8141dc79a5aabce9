#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "oddhole/graph.hpp"

namespace oddhole {

/// graph6 decoding failure, carrying the offending byte offset within the line.
class Graph6Error : public InputError {
 public:
  Graph6Error(const std::string& reason, std::size_t offset, std::size_t line = 0)
      : InputError((line ? "line " + std::to_string(line) + ": " : std::string()) + reason + " at byte " +
                   std::to_string(offset)),
        reason_(reason),
        offset_(offset),
        line_(line) {}
  const std::string& reason() const { return reason_; }
  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }

 private:
  std::string reason_;
  std::size_t offset_;
  std::size_t line_;
};

namespace detail {

inline constexpr int kG6Bias = 63;
inline constexpr int kG6Max = 126;

inline int g6_value(std::string_view text, std::size_t pos) {
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c < kG6Bias || c > kG6Max) throw Graph6Error("character out of range", pos);
  return c - kG6Bias;
}

}  // namespace detail

/// Decodes one graph6 line (no trailing newline). Only the canonical size encoding is accepted
/// and padding bits must be zero, so decode/encode is a bijection on accepted lines.
inline Graph from_graph6(std::string_view text) {
  using detail::g6_value;
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw Graph6Error("malformed header: empty line", 0);
  if (text[0] == ':' || text[0] == ';' || text[0] == '&')
    throw Graph6Error("malformed header: sparse6/digraph6 is not graph6", 0);

  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[0]) != detail::kG6Max) {
    n = static_cast<std::size_t>(g6_value(text, 0));
    pos = 1;
  } else if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == detail::kG6Max) {
    if (text.size() < 8) throw Graph6Error("malformed header: truncated 36-bit size", text.size());
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::size_t>(g6_value(text, i));
    if (n <= 258047) throw Graph6Error("malformed header: non-canonical size encoding", 0);
    pos = 8;
  } else {
    if (text.size() < 4) throw Graph6Error("malformed header: truncated 18-bit size", text.size());
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::size_t>(g6_value(text, i));
    if (n < 63) throw Graph6Error("malformed header: non-canonical size encoding", 0);
    pos = 4;
  }
  if (n > kMaxVertices)
    throw Graph6Error("graph order " + std::to_string(n) + " exceeds supported maximum", 0);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() < pos + bytes) throw Graph6Error("truncated bit payload", text.size());
  if (text.size() > pos + bytes) throw Graph6Error("trailing data after payload", pos + bytes);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      std::size_t byte = pos + k / 6;
      int value = g6_value(text, byte);
      if (value & (0x20 >> (k % 6))) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  if (bytes > 0) {
    std::size_t last = pos + bytes - 1;
    int value = g6_value(text, last);
    int used = static_cast<int>(bits - (bytes - 1) * 6);
    int pad_mask = (1 << (6 - used)) - 1;
    if (value & pad_mask) throw Graph6Error("nonzero padding bits", last);
  }
  return Graph::from_edges(n, edges);
}

inline std::string to_graph6(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + detail::kG6Bias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(detail::kG6Max));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + detail::kG6Bias));
  } else {
    out.append(2, static_cast<char>(detail::kG6Max));
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + detail::kG6Bias));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + detail::kG6Bias));
        acc = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + detail::kG6Bias));
  return out;
}

/// One decoded record of a graph6 stream.
struct Graph6Record {
  std::size_t line = 0;  // 1-based line number in the stream
  Graph graph;
};

/// Reads every non-blank line; a decoding error is rethrown with its line number.
inline std::vector<Graph6Record> read_graph6_stream(std::istream& in) {
  std::vector<Graph6Record> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back({lineno, from_graph6(line)});
    } catch (const Graph6Error& e) {
      throw Graph6Error(e.reason(), e.offset(), lineno);
    }
  }
  return out;
}

}  // namespace oddhole
