#include "abc/graph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "abc/error.hpp"

namespace abc {

namespace {

void check_order(int n) {
  if (n < 1) throw DomainError("graph order must be at least 1, got " + std::to_string(n));
  if (n > Graph::kMaxVertices) {
    throw CapacityError("graph order " + std::to_string(n) + " exceeds capacity of " +
                        std::to_string(Graph::kMaxVertices) + " vertices");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                        ") has a vertex outside [0," + std::to_string(n) + ")");
    }
    if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
    g.link(u, v);
  }
  return g;
}

Graph Graph::from_rows(std::span<const Row> rows) {
  Graph g(static_cast<int>(rows.size()));
  const Row window = g.vertex_mask();
  for (int u = 0; u < g.n_; ++u) {
    const Row r = rows[static_cast<std::size_t>(u)];
    if ((r & ~window) != 0) throw DomainError("row " + std::to_string(u) + " has bits outside the vertex window");
    if ((r >> u) & 1U) throw DomainError("self-loop at vertex " + std::to_string(u));
    for (int v = 0; v < g.n_; ++v) {
      if (((r >> v) & 1U) != ((rows[static_cast<std::size_t>(v)] >> u) & 1U)) {
        throw DomainError("asymmetric adjacency between " + std::to_string(u) + " and " + std::to_string(v));
      }
    }
    g.adj_[static_cast<std::size_t>(u)] = r;
  }
  return g;
}

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

int Graph::min_degree() const noexcept {
  int best = n_;
  for (int v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    Row above = neighbors(u) & ~((Row{2} << u) - 1);
    while (above != 0) {
      out.emplace_back(u, std::countr_zero(above));
      above &= above - 1;
    }
  }
  return out;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(static_cast<std::size_t>(n_));
  for (int v = 0; v < n_; ++v) d[static_cast<std::size_t>(v)] = degree(v);
  return d;
}

std::vector<int> Graph::sorted_degrees() const {
  auto d = degree_sequence();
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

Graph Graph::with_edge(int u, int v) const {
  if (u < 0 || u >= n_ || v < 0 || v >= n_) throw DomainError("vertex out of range");
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  Graph g = *this;
  g.link(u, v);
  return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw DomainError("permutation size does not match graph order");
  Row seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n_ || ((seen >> p) & 1U)) throw DomainError("not a permutation");
    seen |= Row{1} << p;
  }
  Graph g(n_);
  for (const auto& [u, v] : edges()) g.link(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return g;
}

Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph empty(int n) { return Graph(n); }

Graph star(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph::from_edges(n, e);
}

Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph::from_edges(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw DomainError("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int n = g.order() + h.order();
  if (n > Graph::kMaxVertices) {
    throw CapacityError("combined order " + std::to_string(n) + " exceeds capacity of " +
                        std::to_string(Graph::kMaxVertices) + " vertices");
  }
  Graph out(n);
  const int shift = g.order();
  for (int v = 0; v < g.order(); ++v) out.adj_[static_cast<std::size_t>(v)] = g.neighbors(v);
  for (int v = 0; v < h.order(); ++v) out.adj_[static_cast<std::size_t>(v + shift)] = h.neighbors(v) << shift;
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) out.link(u, g.order() + v);
  return out;
}

EdgeMaskDecoder::EdgeMaskDecoder(int n) : n_(n) {
  if (n < 1 || n > 11) throw DomainError("edge-mask decoding supports 1 <= n <= 11");
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs_.emplace_back(u, v);
}

std::uint64_t EdgeMaskDecoder::encode(const Graph& g) const {
  if (g.order() != n_) throw DomainError("graph order does not match decoder");
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < pairs_.size(); ++i)
    if (g.has_edge(pairs_[i].first, pairs_[i].second)) mask |= std::uint64_t{1} << i;
  return mask;
}

}  // namespace abc
