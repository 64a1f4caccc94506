#include "abc/sweep.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <string>

#include "abc/error.hpp"
#include "abc/families.hpp"

namespace abc {

std::string_view to_string(SweepParam kind) noexcept {
  switch (kind) {
    case SweepParam::beta: return "beta";
    case SweepParam::p: return "p";
    case SweepParam::k: return "k";
  }
  return "unknown";
}

std::optional<SweepParam> parse_sweep_param(std::string_view name) noexcept {
  for (auto kind : {SweepParam::beta, SweepParam::p, SweepParam::k})
    if (to_string(kind) == name) return kind;
  return std::nullopt;
}

SweepRange valid_range(int n, SweepParam kind) {
  switch (kind) {
    case SweepParam::beta: return {1, n - 1};
    case SweepParam::p: return {1, n - 1};
    case SweepParam::k: return {2, n - 2};
  }
  throw DomainError("valid_range: unknown parameter kind");
}

SweepRange figure_range(SweepParam kind) noexcept {
  return kind == SweepParam::k ? SweepRange{2, 199} : SweepRange{1, 199};
}

std::vector<SweepRow> sweep(std::span<const int> orders, SweepParam kind, SweepRange range) {
  std::vector<int> sorted(orders.begin(), orders.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<SweepRow> rows;
  for (int n : sorted) {
    const SweepRange ok = valid_range(n, kind);
    for (int v = range.lo; v <= range.hi; ++v) {
      if (v < ok.lo || v > ok.hi) {
        throw DomainError("sweep: row (n=" + std::to_string(n) + ", " + std::string(to_string(kind)) + "=" +
                          std::to_string(v) + ") is outside the valid range [" + std::to_string(ok.lo) + ", " +
                          std::to_string(ok.hi) + "]");
      }
      double value = 0.0;
      switch (kind) {
        case SweepParam::beta: value = formula_independence(n, v); break;
        case SweepParam::p: value = formula_pendant(n, v); break;
        case SweepParam::k: value = formula_edgeconn(n, v); break;
      }
      rows.push_back({n, kind, v, value});
    }
  }
  return rows;
}

std::string format_value(double value) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, 12);
  return {buf.data(), res.ptr};
}

void write_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << kCsvHeader << '\n';
  for (const auto& r : rows) out << std::to_string(r.n) << ',' << to_string(r.kind) << ',' << std::to_string(r.value) << ',' << format_value(r.abc_max) << '\n';
}

}  // namespace abc
