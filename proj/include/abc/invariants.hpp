#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "abc/graph.hpp"

namespace abc {

bool is_connected(const Graph& g) noexcept;

/// Size of a largest independent set.
int independence_number(const Graph& g) noexcept;

/// Least k for which the graph is k-colorable.
int chromatic_number(const Graph& g) noexcept;

/// Minimum number of edges whose removal disconnects g, via unit-capacity
/// max-flow from vertex 0 to every other vertex. Returns 0 for a disconnected
/// graph and for K1.
int edge_connectivity(const Graph& g) noexcept;

/// Number of degree-1 vertices.
int pendant_count(const Graph& g) noexcept;

bool is_isomorphic(const Graph& g, const Graph& h);

enum class Invariant { independence, pendant, edge_connectivity, chromatic };

std::string_view to_string(Invariant kind) noexcept;
std::optional<Invariant> parse_invariant(std::string_view name) noexcept;

/// Pins one invariant to a value; the set of graphs satisfying it is a graph class.
struct ParamConstraint {
  Invariant kind;
  int value;

  /// Throws DomainError when value < 1.
  static ParamConstraint make(Invariant kind, int value);

  friend bool operator==(const ParamConstraint&, const ParamConstraint&) = default;
};

int measure(const Graph& g, Invariant kind) noexcept;

inline bool satisfies(const Graph& g, const ParamConstraint& c) noexcept {
  return measure(g, c.kind) == c.value;
}

}  // namespace abc
