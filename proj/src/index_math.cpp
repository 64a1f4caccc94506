#include "abc/index_math.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "abc/error.hpp"

namespace abc {

namespace {

std::string num(double x) {
  std::string s = std::to_string(x);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

[[noreturn]] void domain(const std::string& fn, const std::string& detail) {
  throw DomainError(fn + ": " + detail);
}

// f over integer degrees, so abc_index does not re-evaluate square roots for
// every edge. Entries are produced by f itself and are therefore identical.
const std::array<std::array<double, Graph::kMaxVertices>, Graph::kMaxVertices>& degree_table() {
  static const auto table = [] {
    std::array<std::array<double, Graph::kMaxVertices>, Graph::kMaxVertices> t{};
    for (int x = 1; x < Graph::kMaxVertices; ++x)
      for (int y = 1; y < Graph::kMaxVertices; ++y) t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = f(x, y);
    return t;
  }();
  return table;
}

struct Checked {
  __int128 v;

  friend Checked operator+(Checked a, Checked b) {
    __int128 r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw CapacityError("big_h: 128-bit overflow");
    return {r};
  }
  friend Checked operator-(Checked a, Checked b) {
    __int128 r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw CapacityError("big_h: 128-bit overflow");
    return {r};
  }
  friend Checked operator*(Checked a, Checked b) {
    __int128 r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw CapacityError("big_h: 128-bit overflow");
    return {r};
  }
};

Checked power(Checked base, int e) {
  Checked r{1};
  for (int i = 0; i < e; ++i) r = r * base;
  return r;
}

}  // namespace

double f(double x, double y) {
  if (!(x >= 1.0) || !(y >= 1.0)) domain("f", "arguments must be >= 1, got (" + num(x) + ", " + num(y) + ")");
  return std::sqrt((x + y - 2.0) / (x * y));
}

double g(double x, double y) { return f(x + 1.0, y) - f(x, y); }

double big_f(double x, int m) {
  if (!(x >= 1.0) || m < 1) domain("big_f", "requires x >= 1 and m >= 1, got (" + num(x) + ", " + std::to_string(m) + ")");
  return x * f(x + m, 1.0);
}

double gap(double a, double b) {
  if (!(a > b) || !(b > 1.0)) domain("gap", "requires a > b > 1, got (" + num(a) + ", " + num(b) + ")");
  return f(a, b - 1.0) - f(a - 1.0, b);
}

double abc_index(const Graph& g) {
  const auto& table = degree_table();
  double sum = 0.0;
  for (int u = 0; u < g.order(); ++u) {
    const auto du = static_cast<std::size_t>(g.degree(u));
    Graph::Row above = g.neighbors(u) & ~((Graph::Row{2} << u) - 1);
    while (above != 0) {
      const int v = std::countr_zero(above);
      above &= above - 1;
      sum += table[du][static_cast<std::size_t>(g.degree(v))];
    }
  }
  return sum;
}

double h(double n, double n1) {
  if (!(n >= 2.0) || !(n1 >= 1.0) || !(2.0 * n1 <= n)) domain("h", "requires n >= 2 and 1 <= n1 <= n/2, got (" + num(n) + ", " + num(n1) + ")");
  return std::pow(n - 2.0, 1.5) - (std::pow(n1, 1.5) + std::pow(n - n1, 1.5));
}

double l(double n, double k, double n1) {
  if (!(n >= 4.0) || !(k >= 2.0) || !(n1 >= 1.0) || !(n1 <= n - 1.0))
    domain("l", "requires n >= 4, k >= 2, 1 <= n1 <= n-1, got (" + num(n) + ", " + num(k) + ", " + num(n1) + ")");
  return std::sqrt(2.0) * k * (std::sqrt((n - 2.0) / (n1 * (n - n1))) - std::sqrt((n + k - 3.0) / (k * (n - 1.0))));
}

__int128 big_h(long long n, long long k) {
  if (n < 1 || k < 1) domain("big_h", "requires n >= 1 and k >= 1");
  const Checked N{n};
  const Checked K{k};
  auto kp = [&](int e) { return power(K, e); };
  auto np = [&](int e) { return power(N, e); };
  auto c = [](long long v) { return Checked{v}; };

  const Checked c5 = kp(2) + K - c(1);
  const Checked c4 = c(8) * kp(2) + c(6) * K - c(9);
  const Checked c3 = c(5) * kp(5) + c(8) * kp(4) + c(19) * kp(2) + c(6) * K - c(30);
  const Checked c2 = kp(6) - c(24) * kp(5) - c(42) * kp(4) - c(2) * kp(3) - c(3) * kp(2) + c(20) * K + c(46);
  const Checked c1 = c(8) * kp(7) + c(6) * kp(6) - c(57) * kp(5) - c(75) * kp(4) + c(10) * kp(3) + c(36) * kp(2) +
                     c(39) * K + c(33);
  const Checked c0 = c(4) * kp(8) + c(12) * kp(7) - c(3) * kp(6) - c(46) * kp(5) - c(37) * kp(4) + c(16) * kp(3) +
                     c(27) * kp(2) + c(18) * K + c(9);
  return (c5 * np(5) - c4 * np(4) + c3 * np(3) + c2 * np(2) - c1 * N + c0).v;
}

std::string to_string(__int128 value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work with negative remainders so the minimum value needs no special case.
  std::string digits;
  while (value != 0) {
    const int d = static_cast<int>(value % 10);
    digits.push_back(static_cast<char>('0' + (negative ? -d : d)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

double claim_margin(int n, int k, int n1) {
  if (n < 4 || k < 2 || n1 < k + 1 || 2 * n1 > n)
    domain("claim_margin", "requires n >= 4, k >= 2, k+1 <= n1 <= n/2, got (" + std::to_string(n) + ", " +
                               std::to_string(k) + ", " + std::to_string(n1) + ")");
  const double nd = n;
  const double kd = k;
  const double a = n1;
  const double b = n - n1;
  const double root2 = std::sqrt(2.0);
  const double lhs = kd * std::sqrt((nd + kd - 3.0) / (kd * (nd - 1.0))) + std::pow(nd - 2.0, 1.5) / root2;
  const double rhs = std::pow(a, 1.5) / root2 + std::pow(b, 1.5) / root2 + kd * std::sqrt((a + b - 2.0) / (a * b));
  return lhs - rhs;
}

bool claim_holds(int n, int k, int n1) {
  if (n < 10) domain("claim_holds", "requires n >= 10, got " + std::to_string(n));
  return claim_margin(n, k, n1) > 0.0;
}

double bridge_value(int n, int x) {
  if (x < 2 || x > n - 2) domain("bridge_value", "requires 2 <= x <= n-2, got (" + std::to_string(n) + ", " + std::to_string(x) + ")");
  const double xd = x;
  const double y = n - x;
  return (xd - 1.0) * f(xd, xd - 1.0) + 0.5 * (xd - 1.0) * (xd - 2.0) * f(xd - 1.0, xd - 1.0) + f(xd, y) +
         (y - 1.0) * f(y, y - 1.0) + 0.5 * (y - 1.0) * (y - 2.0) * f(y - 1.0, y - 1.0);
}

std::vector<GridCheckResult> check_lemmas() {
  std::vector<GridCheckResult> out;

  {
    GridCheckResult r("f(x,1) strictly increasing in x", "x in [1,1000]");
    for (int x = 1; x < 1000; ++x) {
      r.count_point();
      const double d = f(x + 1, 1) - f(x, 1);
      if (!(d > 0.0)) r.record({x}, d);
    }
    out.push_back(std::move(r));
  }
  {
    GridCheckResult r("f(x,2) = sqrt(2)/2", "x in [1,1000]");
    for (int x = 1; x <= 1000; ++x) {
      r.count_point();
      const double d = std::abs(f(x, 2) - std::sqrt(2.0) / 2.0);
      if (d > 1e-15) r.record({x}, -d);
    }
    out.push_back(std::move(r));
  }
  {
    GridCheckResult r("f(x,y) strictly decreasing in x for fixed y >= 3", "y in [3,50], x in [1,1000]");
    for (int y = 3; y <= 50; ++y)
      for (int x = 1; x < 1000; ++x) {
        r.count_point();
        const double d = f(x, y) - f(x + 1, y);
        if (!(d > 0.0)) r.record({x, y}, d);
      }
    out.push_back(std::move(r));
  }
  {
    GridCheckResult r("g(x,1) strictly decreasing in x", "x in [1,1000]");
    for (int x = 1; x < 1000; ++x) {
      r.count_point();
      const double d = g(x, 1) - g(x + 1, 1);
      if (!(d > 0.0)) r.record({x}, d);
    }
    out.push_back(std::move(r));
  }
  {
    GridCheckResult r("g(x,y) increasing in x for y >= 2", "y in [2,50], x in [1,1000]");
    for (int y = 2; y <= 50; ++y)
      for (int x = 1; x < 1000; ++x) {
        r.count_point();
        const double d = g(x + 1, y) - g(x, y);
        if (!(d >= 0.0)) r.record({x, y}, d);
      }
    out.push_back(std::move(r));
  }
  {
    GridCheckResult r("F strictly increasing and convex", "m in [1,50], x in [2,500]");
    for (int m = 1; m <= 50; ++m)
      for (int x = 2; x <= 500; ++x) {
        r.count_point();
        const double rise = big_f(x, m) - big_f(x - 1, m);
        const double second = big_f(x + 1, m) - 2.0 * big_f(x, m) + big_f(x - 1, m);
        if (!(rise > 0.0)) r.record({x, m}, rise);
        if (!(second > 0.0)) r.record({x, m}, second);
      }
    out.push_back(std::move(r));
  }
  {
    GridCheckResult r("F(x+1)-F(x) > F(y)-F(y-1) for x >= y", "m in [1,20], 2 <= y <= x <= 200");
    for (int m = 1; m <= 20; ++m)
      for (int y = 2; y <= 200; ++y)
        for (int x = y; x <= 200; ++x) {
          r.count_point();
          const double d = (big_f(x + 1, m) - big_f(x, m)) - (big_f(y, m) - big_f(y - 1, m));
          if (!(d > 0.0)) r.record({x, y, m}, d);
        }
    out.push_back(std::move(r));
  }
  {
    GridCheckResult r("G(a,b) > 0", "b in [2,100], a in [b+1,200]");
    for (int b = 2; b <= 100; ++b)
      for (int a = b + 1; a <= 200; ++a) {
        r.count_point();
        const double d = gap(a, b);
        if (!(d > 0.0)) r.record({a, b}, d);
      }
    out.push_back(std::move(r));
  }
  return out;
}

GridCheckResult check_claim_grid(int n_max) {
  GridCheckResult r("edge-cut inequality: n1 = 1 side exceeds n1 >= k+1 bound",
                    "10 <= n <= " + std::to_string(n_max) + ", 3 <= k+1 <= n1 <= n/2");
  for (int n = 10; n <= n_max; ++n)
    for (int k = 2; k + 1 <= n / 2; ++k)
      for (int n1 = k + 1; 2 * n1 <= n; ++n1) {
        r.count_point();
        const double m = claim_margin(n, k, n1);
        if (!(m > 0.0)) r.record({n, k, n1}, m);
      }
  return r;
}

GridCheckResult check_big_h_positive(int n_lo, int n_hi) {
  GridCheckResult r("H(n,k) > 0 (exact integers)",
                    std::to_string(n_lo) + " <= n <= " + std::to_string(n_hi) + ", 2 <= k <= n/2 - 1");
  for (int n = n_lo; n <= n_hi; ++n)
    for (int k = 2; k <= n / 2 - 1; ++k) {
      r.count_point();
      const __int128 v = big_h(n, k);
      if (v <= 0) r.record({n, k}, static_cast<double>(v));
    }
  return r;
}

}  // namespace abc
