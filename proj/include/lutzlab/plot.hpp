// plot.hpp -- deterministic SVG / CSV emitters for 2d coefficient slices
#pragma once

#include "lutzlab/region.hpp"

#include <string>
#include <vector>

namespace lutzlab {

struct SliceSpec {
    int axis_x = -1;
    int axis_y = -1;
    std::map<int, double> fixed;  // all remaining coordinates
    int samples = 121;
};

struct SlicePlot {
    std::string svg;
    std::string csv;  // columns x, y, value
    size_t locus_points = 0;
};

// Shades the sign regions of `coeff` over the slice and marks refined zeros.
SlicePlot plot_slice(const ScalarExpr& coeff, const Region& region, const SliceSpec& spec);

}  // namespace lutzlab
