#include "abc/families.hpp"

#include <cmath>
#include <string>

#include "abc/error.hpp"
#include "abc/index_math.hpp"

namespace abc {

namespace {

std::string args(int n, int param) { return "(n=" + std::to_string(n) + ", param=" + std::to_string(param) + ")"; }

void require(bool ok, const char* fn, const char* rule, int n, int param) {
  if (!ok) throw DomainError(std::string(fn) + ": requires " + rule + ", got " + args(n, param));
}

}  // namespace

std::string_view to_string(Family family) noexcept {
  switch (family) {
    case Family::independence_extremal: return "independence";
    case Family::pendant_extremal: return "pendant";
    case Family::edgeconn_extremal: return "edgeconn";
    case Family::turan: return "turan";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  if (name == "independence" || name == "beta" || name == "independence_extremal") return Family::independence_extremal;
  if (name == "pendant" || name == "p" || name == "pendant_extremal") return Family::pendant_extremal;
  if (name == "edgeconn" || name == "k" || name == "edgeconn_extremal") return Family::edgeconn_extremal;
  if (name == "turan" || name == "chromatic") return Family::turan;
  return std::nullopt;
}

Graph build_independence_extremal(int n, int beta) {
  require(1 <= beta && beta <= n - 1, "build_independence_extremal", "1 <= beta <= n-1", n, beta);
  return join(empty(beta), complete(n - beta));
}

double formula_independence(int n, int beta) {
  require(1 <= beta && beta <= n - 1, "formula_independence", "1 <= beta <= n-1", n, beta);
  const double nd = n;
  const double b = beta;
  const double rest = nd - b;
  return b * rest * std::sqrt((2.0 * nd - b - 3.0) / (rest * (nd - 1.0))) +
         rest * (rest - 1.0) / 2.0 * std::sqrt((2.0 * nd - 4.0) / ((nd - 1.0) * (nd - 1.0)));
}

PendantCase pendant_case(int n, int p) {
  require(1 <= p && p <= n - 1 && (n >= 4 || (n == 3 && p == 2)), "pendant_case",
          "1 <= p <= n-1 and n >= 4 (or n = 3, p = 2)", n, p);
  if (n - p == 1) return PendantCase::star;
  if (n - p == 2) return PendantCase::path_broom;
  return PendantCase::clique_with_pendants;
}

Graph build_pendant_extremal(int n, int p) {
  switch (pendant_case(n, p)) {
    case PendantCase::star: return star(n);
    case PendantCase::path_broom: {
      std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}};
      for (int leaf = 3; leaf < n; ++leaf) e.emplace_back(0, leaf);
      return Graph::from_edges(n, e);
    }
    case PendantCase::clique_with_pendants: {
      const int core = n - p;
      std::vector<std::pair<int, int>> e;
      for (int u = 0; u < core; ++u)
        for (int v = u + 1; v < core; ++v) e.emplace_back(u, v);
      for (int leaf = core; leaf < n; ++leaf) e.emplace_back(0, leaf);
      return Graph::from_edges(n, e);
    }
  }
  throw DomainError("build_pendant_extremal: unreachable");
}

double formula_pendant(int n, int p) {
  const double nd = n;
  const double pd = p;
  switch (pendant_case(n, p)) {
    case PendantCase::star: return std::sqrt((nd - 1.0) * (nd - 2.0));
    case PendantCase::path_broom: return (nd - 3.0) * std::sqrt((nd - 3.0) / (nd - 2.0)) + std::sqrt(2.0);
    case PendantCase::clique_with_pendants: {
      const double m = nd - pd - 1.0;
      return pd * std::sqrt((nd - 2.0) / (nd - 1.0)) + m * std::sqrt((2.0 * nd - pd - 4.0) / ((nd - 1.0) * m)) +
             m * (m - 1.0) / 2.0 * std::sqrt((2.0 * nd - 2.0 * pd - 4.0) / (m * m));
    }
  }
  throw DomainError("formula_pendant: unreachable");
}

Graph build_edgeconn_extremal(int n, int k) {
  require(n >= 6 && 2 <= k && k <= n - 2, "build_edgeconn_extremal", "n >= 6 and 2 <= k <= n-2", n, k);
  return join(complete(k), disjoint_union(complete(1), complete(n - k - 1)));
}

double formula_edgeconn(int n, int k) {
  require(n >= 6 && 2 <= k && k <= n - 2, "formula_edgeconn", "n >= 6 and 2 <= k <= n-2", n, k);
  const double nd = n;
  const double kd = k;
  return kd * std::sqrt((nd + kd - 3.0) / (kd * (nd - 1.0))) +
         kd * (kd - 1.0) / (2.0 * (nd - 1.0)) * std::sqrt(2.0 * nd - 4.0) +
         (nd - kd - 1.0) * (nd - kd - 2.0) / (2.0 * (nd - 2.0)) * std::sqrt(2.0 * nd - 6.0) +
         kd * (nd - kd - 1.0) * std::sqrt((2.0 * nd - 5.0) / ((nd - 1.0) * (nd - 2.0)));
}

std::vector<int> turan_parts(int n, int t) {
  require(2 <= t && t <= n, "turan_parts", "2 <= t <= n", n, t);
  std::vector<int> parts(static_cast<std::size_t>(t), n / t);
  for (int i = 0; i < n % t; ++i) ++parts[static_cast<std::size_t>(i)];
  return parts;
}

Graph build_turan(int n, int t) {
  const auto parts = turan_parts(n, t);
  if (n > Graph::kMaxVertices) throw CapacityError("build_turan: order " + std::to_string(n) + " exceeds capacity");
  std::vector<int> part_of;
  for (int i = 0; i < t; ++i) part_of.insert(part_of.end(), static_cast<std::size_t>(parts[static_cast<std::size_t>(i)]), i);
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

double formula_turan(int n, int t) {
  const auto parts = turan_parts(n, t);
  double sum = 0.0;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      const double a = parts[i];
      const double b = parts[j];
      sum += a * b * f(n - a, n - b);
    }
  return sum;
}

double formula_bipartite(int n) {
  require(n >= 2, "formula_bipartite", "n >= 2", n, 2);
  const double nd = n;
  if (n % 2 == 0) return nd / 2.0 * std::sqrt(nd - 2.0);
  return 0.5 * std::sqrt((nd - 2.0) * (nd * nd - 1.0));
}

Graph build(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::independence_extremal: return build_independence_extremal(spec.n, spec.param);
    case Family::pendant_extremal: return build_pendant_extremal(spec.n, spec.param);
    case Family::edgeconn_extremal: return build_edgeconn_extremal(spec.n, spec.param);
    case Family::turan: return build_turan(spec.n, spec.param);
  }
  throw DomainError("build: unknown family");
}

double formula(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::independence_extremal: return formula_independence(spec.n, spec.param);
    case Family::pendant_extremal: return formula_pendant(spec.n, spec.param);
    case Family::edgeconn_extremal: return formula_edgeconn(spec.n, spec.param);
    case Family::turan: return spec.param == 2 ? formula_bipartite(spec.n) : formula_turan(spec.n, spec.param);
  }
  throw DomainError("formula: unknown family");
}

}  // namespace abc
