#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "abc/graph.hpp"

namespace abc {

enum class Family { independence_extremal, pendant_extremal, edgeconn_extremal, turan };

std::string_view to_string(Family family) noexcept;
/// Accepts the enum names and the short aliases independence|beta, pendant|p,
/// edgeconn|k, turan|chromatic.
std::optional<Family> parse_family(std::string_view name) noexcept;

struct FamilySpec {
  Family family;
  int n;
  int param;
};

/// Complement of K_beta joined with K_{n-beta}; 1 <= beta <= n-1.
Graph build_independence_extremal(int n, int beta);
double formula_independence(int n, int beta);

/// Which extremal shape applies to (n, p).
enum class PendantCase { star, path_broom, clique_with_pendants };
PendantCase pendant_case(int n, int p);

/// Star when n-p = 1; the path u-v-w with n-3 leaves on u when n-p = 2;
/// otherwise K_{n-p} with p leaves on one clique vertex. Requires
/// 1 <= p <= n-1, and n >= 4 unless (n, p) = (3, 2).
Graph build_pendant_extremal(int n, int p);
double formula_pendant(int n, int p);

/// K_k joined with (K_1 + K_{n-k-1}); n >= 6, 2 <= k <= n-2.
Graph build_edgeconn_extremal(int n, int k);
double formula_edgeconn(int n, int k);

/// Balanced part sizes for T_{n,t}, larger parts first.
std::vector<int> turan_parts(int n, int t);

/// Complete t-partite graph with balanced parts; 2 <= t <= n.
Graph build_turan(int n, int t);
/// ABC index of T_{n,t} evaluated from the part sizes, valid beyond graph capacity.
double formula_turan(int n, int t);
/// Closed form for T_{n,2}, split by parity of n; n >= 2.
double formula_bipartite(int n);

Graph build(const FamilySpec& spec);
double formula(const FamilySpec& spec);

}  // namespace abc
