#pragma once

#include <cstdint>
#include <vector>

#include "abc/enumerator.hpp"
#include "abc/index_math.hpp"

namespace abc {

/// Brute-force ceiling options shared by every verifier entry point.
struct ScanOptions {
  int shards = 1;
  bool allow_n8 = false;
};

/// One report per beta in [1, n-1]; requires 4 <= n <= 7 (8 with opt-in).
std::vector<ExtremalReport> verify_independence(int n, const ScanOptions& opts = {});

/// One report per p in [1, n-1]; requires 4 <= n <= 7 (8 with opt-in).
std::vector<ExtremalReport> verify_pendant(int n, const ScanOptions& opts = {});

/// One report per k in [2, n-2]. For n in {4, 5} the reports are marked
/// informational and carry no formula or verdict.
std::vector<ExtremalReport> verify_edgeconn(int n, const ScanOptions& opts = {});

/// The chromatic-number-2 class; requires 4 <= n <= 7.
ExtremalReport verify_chromatic_bipartite(int n, const ScanOptions& opts = {});

/// True iff every report that is not informational has unique_and_matches.
bool all_verified(const std::vector<ExtremalReport>& reports) noexcept;

struct ConjectureReport {
  int n = 0;
  int chi = 0;
  double turan_value = 0.0;
  double brute_max = 0.0;
  std::uint64_t class_size = 0;
  bool holds = false;
  std::vector<Graph> witness;  // maximizer iso classes
};

/// Compares the brute-force maximum of the class chi(G) = chi against
/// T_{n,chi}. Requires 4 <= n <= 7, 3 <= chi <= n. Never throws on a
/// counterexample; holds is simply false.
ConjectureReport check_chromatic_conjecture(int n, int chi, const ScanOptions& opts = {});

struct EdgeAdditionResult {
  bool holds = true;
  std::uint64_t graphs = 0;
  std::uint64_t additions = 0;
  std::uint64_t strict_increases = 0;
};

/// ABC(G) <= ABC(G + xy) over every connected labeled graph on n vertices and
/// every non-edge xy; 2 <= n <= 6.
EdgeAdditionResult check_edge_addition_monotonicity(int n);

/// bridge_value(n, x) > bridge_value(n, x + 1) for 6 <= n <= n_max and
/// 2 <= x <= n/2 - 1; requires n_max >= 6.
GridCheckResult check_bridge_monotonicity(int n_max);

}  // namespace abc
