#pragma once

#include <string>
#include <vector>

#include "abc/graph.hpp"

namespace abc {

/// Absolute tolerance for comparing ABC values.
inline constexpr double kAbcTolerance = 1e-9;

/// Edge weight sqrt((x + y - 2) / (x y)); requires x, y >= 1.
double f(double x, double y);

/// Forward difference f(x + 1, y) - f(x, y).
double g(double x, double y);

/// x * f(x + m, 1); requires x >= 1, m >= 1.
double big_f(double x, int m);

/// f(a, b - 1) - f(a - 1, b); requires a > b > 1.
double gap(double a, double b);

/// Atom-bond connectivity index: sum of f(d(u), d(v)) over edges, accumulated
/// in lexicographic edge order.
double abc_index(const Graph& g);

/// (n-2)^{3/2} - n1^{3/2} - (n-n1)^{3/2}; requires n >= 2, 1 <= n1 <= n/2.
double h(double n, double n1);

/// sqrt(2) k (sqrt((n-2)/(n1(n-n1))) - sqrt((n+k-3)/(k(n-1)))); requires
/// n >= 4, k >= 2, 1 <= n1 <= n-1.
double l(double n, double k, double n1);

/// Exact value of the degree-5 polynomial H(n, k) whose sign decides the
/// monotonicity of l(n, k, k+1) in k. Evaluated in checked 128-bit integers;
/// throws CapacityError on overflow.
__int128 big_h(long long n, long long k);

std::string to_string(__int128 value);

/// Left side minus right side of the edge-cut comparison
///   k sqrt((n+k-3)/(k(n-1))) + (n-2)^{3/2}/sqrt2
///     vs  n1^{3/2}/sqrt2 + n2^{3/2}/sqrt2 + k sqrt((n-2)/(n1 n2)),   n2 = n - n1.
/// Requires n >= 4, k >= 2, k + 1 <= n1 <= n/2.
double claim_margin(int n, int k, int n1);

/// claim_margin(n, k, n1) > 0, restricted to n >= 10, 3 <= k+1 <= n1 <= n/2.
bool claim_holds(int n, int k, int n1);

/// ABC index of K_x and K_{n-x} joined by a single edge; requires 2 <= x <= n-2.
double bridge_value(int n, int x);

struct GridViolation {
  std::vector<long long> point;
  double margin;  // amount by which the asserted inequality failed (<= 0)
};

/// Outcome of scanning an inequality over a finite integer grid.
class GridCheckResult {
 public:
  GridCheckResult(std::string description, std::string domain)
      : description_(std::move(description)), domain_(std::move(domain)) {}

  void record(std::vector<long long> point, double margin) { violations_.push_back({std::move(point), margin}); }
  void count_point() noexcept { ++points_; }

  const std::string& description() const noexcept { return description_; }
  const std::string& domain() const noexcept { return domain_; }
  const std::vector<GridViolation>& violations() const noexcept { return violations_; }
  long long points_checked() const noexcept { return points_; }
  bool passed() const noexcept { return violations_.empty(); }

 private:
  std::string description_;
  std::string domain_;
  std::vector<GridViolation> violations_;
  long long points_ = 0;
};

/// Grid checks of the monotonicity and convexity facts about f, g, F and G.
std::vector<GridCheckResult> check_lemmas();

/// claim_holds over 10 <= n <= n_max, 3 <= k+1 <= n1 <= n/2.
GridCheckResult check_claim_grid(int n_max);

/// big_h(n, k) > 0 over n in [n_lo, n_hi], 2 <= k <= n/2 - 1.
GridCheckResult check_big_h_positive(int n_lo, int n_hi);

}  // namespace abc
