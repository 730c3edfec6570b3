#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bc/cuts.hpp"
#include "bc/eval.hpp"

namespace bc {

struct Viewport {
    double x_min = -4.0, x_max = 4.0;
    double y_min = -4.0, y_max = 4.0;
    double resolution = 100.0;  // samples per unit

    bool contains(double x, double y) const {
        return x >= x_min && x <= x_max && y >= y_min && y <= y_max;
    }
};

enum class LineStyle { Solid, Dashed, Dotted };

struct Polyline {
    std::vector<std::pair<double, double>> points;
    LineStyle style = LineStyle::Solid;
};

// Samples a cut into viewport-clipped polylines. Consecutive points are kept
// within 2/resolution of each other (adaptive refinement on steep stretches);
// leaving the viewport or hitting a non-finite value starts a new polyline.
// Style follows the classification; Mixed cuts split per segment.
std::vector<Polyline> sample_cut(const BranchCut& cut, const Viewport& vp,
                                 const std::map<std::string, double>& params = {});

// Deterministic standalone SVG: viewport frame, axes, one path per polyline.
std::string emit_svg(const CutSet& cs, const Viewport& vp,
                     const std::map<std::string, double>& params = {});

// Numeric discontinuity oracle: evaluates e on the viewport grid and returns
// midpoints of grid edges whose value delta exceeds 10x the local median
// delta and 1e-3 absolute. Points near poles (|e| > 1e6) are dropped.
std::vector<std::pair<double, double>> grid_discontinuity_scan(
    const Expr& e, const Viewport& vp,
    const std::map<std::string, double>& params = {});

}  // namespace bc
