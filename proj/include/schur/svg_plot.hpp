#pragma once

#include <string>
#include <vector>

#include "schur/variability.hpp"

// Standalone SVG figures of the unit disk: nodes, query point, the
// variability region, and extremal boundary samples.  The viewport is a
// fixed 512x512 square, one unit = 256 px, origin at the center, y up.

namespace schur::io {

struct PlotOptions {
    int epsilon_samples = 32;   // unimodular eps markers on the region rim
    int grid = 0;               // light reference grid lines per axis half
};

double svg_x(Complex u);   // 256 (1 + Re u)
double svg_y(Complex u);   // 256 (1 - Im u)

std::string render_plot_svg(const std::vector<Complex>& nodes, Complex query,
                            const VariabilityRegion& region,
                            const std::vector<Complex>& boundary_samples,
                            const PlotOptions& opts);

}  // namespace schur::io
