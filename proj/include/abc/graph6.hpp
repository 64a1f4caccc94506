#pragma once

#include <string>
#include <string_view>

#include "abc/graph.hpp"

namespace abc {

/// Decodes a headerless graph6 string with 1 <= n <= 32. Throws ParseError
/// carrying the byte offset of the first problem.
Graph parse_graph6(std::string_view text);

/// Standard graph6 encoding: size byte n + 63, then the upper triangle read
/// column by column, packed six bits per byte (most significant first) + 63.
std::string write_graph6(const Graph& g);

}  // namespace abc
