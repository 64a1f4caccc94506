#include "abc/invariants.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <vector>

#include "abc/error.hpp"

namespace abc {

using Row = Graph::Row;

bool is_connected(const Graph& g) noexcept {
  const Row all = g.vertex_mask();
  Row reached = 1;
  Row frontier = 1;
  while (frontier != 0) {
    Row next = 0;
    while (frontier != 0) {
      next |= g.neighbors(std::countr_zero(frontier));
      frontier &= frontier - 1;
    }
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == all;
}

namespace {

// Maximum independent set inside `candidates`. Branches on the candidate of
// highest degree within the candidate set; vertices with no candidate
// neighbours are taken greedily.
int max_independent(const Graph& g, Row candidates, int taken, int best) {
  while (true) {
    if (candidates == 0) return std::max(best, taken);
    if (taken + std::popcount(candidates) <= best) return best;
    Row isolated = 0;
    int pivot = -1;
    int pivot_deg = -1;
    for (Row rest = candidates; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const int d = std::popcount(g.neighbors(v) & candidates);
      if (d == 0) isolated |= Row{1} << v;
      if (d > pivot_deg) {
        pivot_deg = d;
        pivot = v;
      }
    }
    if (isolated != 0) {
      taken += std::popcount(isolated);
      candidates &= ~isolated;
      continue;
    }
    const Row bit = Row{1} << pivot;
    best = max_independent(g, candidates & ~bit & ~g.neighbors(pivot), taken + 1, best);
    candidates &= ~bit;
  }
}

bool colorable(const Graph& g, int colors, int v, std::array<Row, Graph::kMaxVertices>& classes, int used) {
  if (v == g.order()) return true;
  const Row nbrs = g.neighbors(v);
  // Opening a fresh color class is only tried once (color `used`), which
  // removes color-permutation symmetry.
  const int limit = std::min(colors, used + 1);
  for (int c = 0; c < limit; ++c) {
    if ((classes[static_cast<std::size_t>(c)] & nbrs) != 0) continue;
    classes[static_cast<std::size_t>(c)] |= Row{1} << v;
    if (colorable(g, colors, v + 1, classes, std::max(used, c + 1))) return true;
    classes[static_cast<std::size_t>(c)] &= ~(Row{1} << v);
  }
  return false;
}

// Edge-disjoint s-t paths in the unit-capacity symmetric network of g.
// net[u][v] is the signed flow on the edge in direction u->v, in [-1, 1].
int max_flow(const Graph& g, int s, int t) {
  std::array<std::array<signed char, Graph::kMaxVertices>, Graph::kMaxVertices> net{};
  std::array<int, Graph::kMaxVertices> parent{};
  std::array<int, Graph::kMaxVertices> queue{};
  int flow = 0;
  while (true) {
    parent.fill(-1);
    parent[static_cast<std::size_t>(s)] = s;
    int head = 0;
    int tail = 0;
    queue[static_cast<std::size_t>(tail++)] = s;
    while (head < tail && parent[static_cast<std::size_t>(t)] < 0) {
      const int u = queue[static_cast<std::size_t>(head++)];
      for (Row nb = g.neighbors(u); nb != 0; nb &= nb - 1) {
        const int v = std::countr_zero(nb);
        if (parent[static_cast<std::size_t>(v)] < 0 && net[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] < 1) {
          parent[static_cast<std::size_t>(v)] = u;
          queue[static_cast<std::size_t>(tail++)] = v;
        }
      }
    }
    if (parent[static_cast<std::size_t>(t)] < 0) return flow;
    for (int v = t; v != s; v = parent[static_cast<std::size_t>(v)]) {
      const int u = parent[static_cast<std::size_t>(v)];
      ++net[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      --net[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
    }
    ++flow;
  }
}

// Color refinement run jointly over g and h so that color ids are comparable.
// Returns false as soon as the two color histograms disagree.
bool refine(const Graph& g, const Graph& h, std::vector<int>& cg, std::vector<int>& ch) {
  const int n = g.order();
  cg.assign(static_cast<std::size_t>(n), 0);
  ch.assign(static_cast<std::size_t>(n), 0);
  int classes = 1;
  while (true) {
    using Signature = std::pair<int, std::vector<int>>;
    auto signature = [](const Graph& x, const std::vector<int>& col, int v) {
      std::vector<int> around;
      for (Row nb = x.neighbors(v); nb != 0; nb &= nb - 1) around.push_back(col[static_cast<std::size_t>(std::countr_zero(nb))]);
      std::sort(around.begin(), around.end());
      return Signature{col[static_cast<std::size_t>(v)], std::move(around)};
    };
    std::vector<Signature> sg;
    std::vector<Signature> sh;
    for (int v = 0; v < n; ++v) {
      sg.push_back(signature(g, cg, v));
      sh.push_back(signature(h, ch, v));
    }
    std::map<Signature, int> ids;
    for (const auto& s : sg) ids.emplace(s, 0);
    for (const auto& s : sh) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> hist(static_cast<std::size_t>(next), 0);
    for (int v = 0; v < n; ++v) {
      cg[static_cast<std::size_t>(v)] = ids[sg[static_cast<std::size_t>(v)]];
      ch[static_cast<std::size_t>(v)] = ids[sh[static_cast<std::size_t>(v)]];
      ++hist[static_cast<std::size_t>(cg[static_cast<std::size_t>(v)])];
      --hist[static_cast<std::size_t>(ch[static_cast<std::size_t>(v)])];
    }
    if (std::any_of(hist.begin(), hist.end(), [](int c) { return c != 0; })) return false;
    if (next == classes) return true;
    classes = next;
  }
}

bool extend(const Graph& g, const Graph& h, const std::vector<int>& cg, const std::vector<int>& ch,
            const std::vector<int>& order, std::size_t depth, std::array<int, Graph::kMaxVertices>& map,
            Row used) {
  if (depth == order.size()) return true;
  const int u = order[depth];
  for (int w = 0; w < h.order(); ++w) {
    if ((used >> w) & 1U) continue;
    if (cg[static_cast<std::size_t>(u)] != ch[static_cast<std::size_t>(w)]) continue;
    bool ok = true;
    for (std::size_t i = 0; i < depth && ok; ++i) {
      const int pu = order[i];
      ok = g.has_edge(u, pu) == h.has_edge(w, map[static_cast<std::size_t>(pu)]);
    }
    if (!ok) continue;
    map[static_cast<std::size_t>(u)] = w;
    if (extend(g, h, cg, ch, order, depth + 1, map, used | (Row{1} << w))) return true;
  }
  return false;
}

}  // namespace

int independence_number(const Graph& g) noexcept { return max_independent(g, g.vertex_mask(), 0, 0); }

int chromatic_number(const Graph& g) noexcept {
  if (g.edge_count() == 0) return 1;
  std::array<Row, Graph::kMaxVertices> classes{};
  for (int k = 2; k < g.order(); ++k) {
    classes.fill(0);
    if (colorable(g, k, 0, classes, 0)) return k;
  }
  return g.order();
}

int edge_connectivity(const Graph& g) noexcept {
  if (g.order() < 2 || !is_connected(g)) return 0;
  int best = g.min_degree();
  for (int t = 1; t < g.order() && best > 0; ++t) best = std::min(best, max_flow(g, 0, t));
  return best;
}

int pendant_count(const Graph& g) noexcept {
  int count = 0;
  for (int v = 0; v < g.order(); ++v) count += g.degree(v) == 1 ? 1 : 0;
  return count;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (g.sorted_degrees() != h.sorted_degrees()) return false;
  std::vector<int> cg;
  std::vector<int> ch;
  if (!refine(g, h, cg, ch)) return false;

  // Search order: most neighbours among already-ordered vertices first, then
  // smallest color class.
  const int n = g.order();
  std::vector<int> class_size(static_cast<std::size_t>(n + 1), 0);
  for (int c : cg) ++class_size[static_cast<std::size_t>(c)];
  std::vector<int> order;
  Row placed = 0;
  while (static_cast<int>(order.size()) < n) {
    int pick = -1;
    std::pair<int, int> key{};
    for (int v = 0; v < n; ++v) {
      if ((placed >> v) & 1U) continue;
      const std::pair<int, int> k{-std::popcount(g.neighbors(v) & placed), class_size[static_cast<std::size_t>(cg[static_cast<std::size_t>(v)])]};
      if (pick < 0 || k < key) {
        pick = v;
        key = k;
      }
    }
    order.push_back(pick);
    placed |= Row{1} << pick;
  }
  std::array<int, Graph::kMaxVertices> map{};
  return extend(g, h, cg, ch, order, 0, map, 0);
}

std::string_view to_string(Invariant kind) noexcept {
  switch (kind) {
    case Invariant::independence: return "independence";
    case Invariant::pendant: return "pendant";
    case Invariant::edge_connectivity: return "edge_connectivity";
    case Invariant::chromatic: return "chromatic";
  }
  return "unknown";
}

std::optional<Invariant> parse_invariant(std::string_view name) noexcept {
  for (auto kind : {Invariant::independence, Invariant::pendant, Invariant::edge_connectivity, Invariant::chromatic})
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

ParamConstraint ParamConstraint::make(Invariant kind, int value) {
  if (value < 1) throw DomainError("constraint value must be at least 1, got " + std::to_string(value));
  return {kind, value};
}

int measure(const Graph& g, Invariant kind) noexcept {
  switch (kind) {
    case Invariant::independence: return independence_number(g);
    case Invariant::pendant: return pendant_count(g);
    case Invariant::edge_connectivity: return edge_connectivity(g);
    case Invariant::chromatic: return chromatic_number(g);
  }
  return -1;
}

}  // namespace abc
