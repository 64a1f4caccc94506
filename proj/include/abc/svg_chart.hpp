#pragma once

#include <span>
#include <string>

#include "abc/sweep.hpp"

namespace abc {

struct ChartSpec {
  std::string title = "Maximum ABC index";
  std::string x_label = "parameter value";
  std::string y_label = "maximum ABC index";
  int width = 800;
  int height = 500;
};

/// Standalone SVG 1.1 line chart with one polyline per (n, parameter kind)
/// series, in order of first appearance. Output depends only on the inputs.
/// Throws DomainError on empty input.
std::string render_svg(std::span<const SweepRow> rows, const ChartSpec& spec = {});

}  // namespace abc
