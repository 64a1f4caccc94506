#include "abc/graph6.hpp"

#include <vector>

#include "abc/error.hpp"

namespace abc {

namespace {

constexpr int kBias = 63;
constexpr int kMaxPrintable = 126;

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  const int size_byte = static_cast<unsigned char>(text[0]);
  if (size_byte < kBias || size_byte > kMaxPrintable) throw ParseError("graph6: malformed length byte", 0);
  if (size_byte == kMaxPrintable) throw ParseError("graph6: multi-byte order (n >= 63) exceeds capacity of 32", 0);
  const int n = size_byte - kBias;
  if (n == 0) throw ParseError("graph6: zero-vertex graph is not supported", 0);
  if (n > Graph::kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " exceeds capacity of 32", 0);

  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() < 1 + body) throw ParseError("graph6: truncated adjacency data", text.size());
  if (text.size() > 1 + body) throw ParseError("graph6: unexpected trailing bytes", 1 + body);

  std::vector<Graph::Row> rows(static_cast<std::size_t>(n), 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kMaxPrintable) throw ParseError("graph6: byte outside the printable range 63..126", i);
    const int chunk = c - kBias;
    for (int b = 5; b >= 0; --b, ++k) {
      const bool set = (chunk >> b) & 1;
      if (k >= bits) {
        if (set) throw ParseError("graph6: nonzero padding bits", i);
        continue;
      }
      if (!set) continue;
      // Column-major upper triangle: bit k is (u, v) with u < v.
      int v = 1;
      std::size_t start = 0;
      while (start + static_cast<std::size_t>(v) <= k) {
        start += static_cast<std::size_t>(v);
        ++v;
      }
      const int u = static_cast<int>(k - start);
      rows[static_cast<std::size_t>(u)] |= Graph::Row{1} << v;
      rows[static_cast<std::size_t>(v)] |= Graph::Row{1} << u;
    }
  }
  return Graph::from_rows(rows);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out(1, static_cast<char>(n + kBias));
  int chunk = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      chunk = (chunk << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

}  // namespace abc
