#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "abc/graph.hpp"
#include "abc/invariants.hpp"

namespace abc {

/// A scan over all connected labeled graphs of one order, optionally
/// restricted to graphs whose measured invariant equals a target.
struct EnumerationTask {
  int n = 0;
  std::optional<ParamConstraint> constraint;
  int shards = 1;
  /// n = 8 (2^28 edge masks) must be requested explicitly.
  bool allow_n8 = false;

  /// Throws DomainError unless 2 <= n <= 7 (8 with allow_n8) and shards >= 1.
  void validate() const;
};

/// Result of a brute-force maximization of ABC over one graph class.
struct ExtremalReport {
  int n = 0;
  ParamConstraint constraint{Invariant::independence, 1};
  std::uint64_t class_size = 0;
  /// Empty when the class has no members.
  std::optional<double> max_value;
  std::uint64_t labeled_maximizers = 0;
  /// One representative per isomorphism class, the smallest edge mask of each.
  std::vector<Graph> maximizer_iso_classes;
  /// max_value minus the best value below max_value - tolerance; empty when
  /// every member of the class is a maximizer.
  std::optional<double> runner_up_gap;

  // Filled in by the verifier.
  std::optional<double> formula_value;
  bool matches_construction = false;
  bool unique_and_matches = false;
  /// Set when (n, parameter) lies outside the hypotheses of the theorem being checked.
  bool informational = false;
};

/// Calls `visit` for every connected labeled graph on task.n vertices that
/// satisfies the constraint, in ascending edge-mask order. Single-threaded;
/// task.shards is ignored.
void for_each_connected(const EnumerationTask& task, const std::function<void(const Graph&)>& visit);

/// Materialized form of for_each_connected, for small n.
std::vector<Graph> enumerate_connected(const EnumerationTask& task);

/// Number of connected labeled graphs matching the task.
std::uint64_t count_connected(const EnumerationTask& task);

/// Scans the class in task.shards contiguous edge-mask ranges, one worker per
/// shard up to the hardware concurrency, and merges partial results in shard
/// order. The constraint must be present.
ExtremalReport max_abc_over_class(const EnumerationTask& task);

}  // namespace abc
