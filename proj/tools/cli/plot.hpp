#pragma once

#include <cstddef>
#include <string>

#include "inflatable/permutation.hpp"

namespace inflatable::cli {

enum class PlotFormat { svg, ascii };

inline constexpr std::size_t kMaxAsciiPlot = 200;

/// Dot plot with a mark at column i, row tau_i. ASCII rows run from value n
/// at the top down to 1; SVG puts each dot at (i - 1/2, n - tau_i + 1/2) on
/// an n x n grid. Output is byte-deterministic.
std::string plot(const Permutation& tau, PlotFormat format);

}  // namespace inflatable::cli
