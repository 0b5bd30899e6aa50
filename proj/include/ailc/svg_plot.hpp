#pragma once

#include <string>
#include <vector>

#include "ailc/harness.hpp"

namespace ailc {

struct PlotSeries {
  std::string label;
  const ExperimentReport* report = nullptr;
};

/// Renders a self-contained static SVG with two log-scale panels (peak
/// tracking error and peak identification error versus iteration), one
/// series per report, with a legend when there are several. Byte output is
/// deterministic for fixed input. Rejects an empty series list.
std::string convergence_svg(const std::vector<PlotSeries>& series);

}  // namespace ailc
