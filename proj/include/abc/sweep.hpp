#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace abc {

enum class SweepParam { beta, p, k };

std::string_view to_string(SweepParam kind) noexcept;
std::optional<SweepParam> parse_sweep_param(std::string_view name) noexcept;

struct SweepRow {
  int n;
  SweepParam kind;
  int value;
  double abc_max;
};

struct SweepRange {
  int lo;
  int hi;
};

/// Parameter values the closed form accepts at order n: beta, p in [1, n-1],
/// k in [2, n-2].
SweepRange valid_range(int n, SweepParam kind);

/// Default figure ranges: beta and p over [1, 199], k over [2, 199].
SweepRange figure_range(SweepParam kind) noexcept;

/// Closed-form maxima for every n in `orders` and every value in `range`,
/// ascending by (n, value). Throws DomainError naming the first row whose
/// value falls outside valid_range.
std::vector<SweepRow> sweep(std::span<const int> orders, SweepParam kind, SweepRange range);

/// 12 significant digits, '.' decimal separator regardless of locale.
std::string format_value(double value);

inline constexpr std::string_view kCsvHeader = "n,param_kind,param_value,abc_max";

void write_csv(std::ostream& out, std::span<const SweepRow> rows);

}  // namespace abc
