#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace abc {

/// Simple undirected graph on at most 32 vertices, stored as one neighbor
/// bitset per vertex. Values are immutable once built; every "modifying"
/// operation returns a new graph.
class Graph {
 public:
  using Row = std::uint32_t;
  static constexpr int kMaxVertices = 32;

  /// Edgeless graph on n vertices, 1 <= n <= 32.
  explicit Graph(int n);

  /// Throws DomainError on an out-of-range vertex or a self-loop.
  /// Duplicate pairs collapse into one edge.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }

  /// Adjacency rows, validated for symmetry, empty diagonal and the n-bit window.
  static Graph from_rows(std::span<const Row> rows);

  int order() const noexcept { return n_; }
  Row neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const noexcept { return (adj_[static_cast<std::size_t>(u)] >> v) & 1U; }
  int degree(int v) const noexcept { return std::popcount(neighbors(v)); }
  int edge_count() const noexcept;
  int min_degree() const noexcept;
  Row vertex_mask() const noexcept { return n_ == kMaxVertices ? ~Row{0} : ((Row{1} << n_) - 1); }

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> degree_sequence() const;
  /// Degrees sorted descending.
  std::vector<int> sorted_degrees() const;

  Graph with_edge(int u, int v) const;
  /// Vertex v of this graph becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const int> perm) const;

  std::span<const Row> rows() const noexcept { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  Graph() = default;
  void link(int u, int v) noexcept {
    adj_[static_cast<std::size_t>(u)] |= Row{1} << v;
    adj_[static_cast<std::size_t>(v)] |= Row{1} << u;
  }

  friend Graph join(const Graph&, const Graph&);
  friend Graph disjoint_union(const Graph&, const Graph&);
  friend class EdgeMaskDecoder;

  int n_ = 0;
  std::array<Row, kMaxVertices> adj_{};
};

Graph complete(int n);
Graph empty(int n);
/// Vertex 0 is the center.
Graph star(int n);
Graph path(int n);
Graph cycle(int n);

/// Disjoint union plus every edge between the two vertex sets. Vertices of h
/// are shifted by g.order().
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

/// Decodes edge masks whose bit i is the i-th vertex pair in lexicographic
/// order (0,1), (0,2), ..., (0,n-1), (1,2), ...
class EdgeMaskDecoder {
 public:
  explicit EdgeMaskDecoder(int n);

  int order() const noexcept { return n_; }
  int pair_count() const noexcept { return static_cast<int>(pairs_.size()); }
  std::pair<int, int> pair(int bit) const noexcept { return pairs_[static_cast<std::size_t>(bit)]; }

  Graph decode(std::uint64_t mask) const noexcept {
    Graph g;
    g.n_ = n_;
    while (mask != 0) {
      const int bit = std::countr_zero(mask);
      mask &= mask - 1;
      const auto [u, v] = pairs_[static_cast<std::size_t>(bit)];
      g.link(u, v);
    }
    return g;
  }

  std::uint64_t encode(const Graph& g) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> pairs_;
};

}  // namespace abc
