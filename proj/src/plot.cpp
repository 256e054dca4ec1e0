#include "lutzlab/plot.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace lutzlab {

namespace {
constexpr int kCanvas = 800;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}
}  // namespace

SlicePlot plot_slice(const ScalarExpr& coeff, const Region& region, const SliceSpec& spec) {
    const ChartPtr& chart = region.chart();
    if (spec.axis_x < 0 || spec.axis_y < 0 || spec.axis_x == spec.axis_y)
        throw BadSlice("two distinct axes required");
    for (int i = 0; i < chart->dim(); ++i) {
        if (i == spec.axis_x || i == spec.axis_y) continue;
        if (!spec.fixed.count(i))
            throw BadSlice("coordinate " + chart->coord(i).name + " not fixed");
    }

    auto [x0, x1] = region.box()[static_cast<size_t>(spec.axis_x)];
    auto [y0, y1] = region.box()[static_cast<size_t>(spec.axis_y)];
    int N = spec.samples;
    std::vector<double> point(static_cast<size_t>(chart->dim()), 0.0);
    for (const auto& [i, v] : spec.fixed) point[static_cast<size_t>(i)] = v;

    std::ostringstream csv, svg;
    csv << "x,y,value\n";
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\""
        << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas << "\">\n";
    svg << "<rect width=\"" << kCanvas << "\" height=\"" << kCanvas
        << "\" fill=\"#ffffff\"/>\n";

    double cell = static_cast<double>(kCanvas) / N;
    size_t admissible = 0;
    for (int iy = 0; iy < N; ++iy) {
        for (int ix = 0; ix < N; ++ix) {
            double x = x0 + (x1 - x0) * (N == 1 ? 0.5 : 1.0 * ix / (N - 1));
            double y = y0 + (y1 - y0) * (N == 1 ? 0.5 : 1.0 * iy / (N - 1));
            point[static_cast<size_t>(spec.axis_x)] = x;
            point[static_cast<size_t>(spec.axis_y)] = y;
            if (!region.contains(point)) continue;
            double v;
            try {
                v = coeff.evaluate(point);
            } catch (const DomainPole&) {
                continue;
            }
            ++admissible;
            csv << num(x) << "," << num(y) << "," << num(v) << "\n";
            const char* fill = v > 1e-9 ? "#9ecae1" : (v < -1e-9 ? "#fdae6b" : "#636363");
            double px = cell * ix, py = kCanvas - cell * (iy + 1);
            svg << "<rect x=\"" << num(px) << "\" y=\"" << num(py) << "\" width=\""
                << num(cell) << "\" height=\"" << num(cell) << "\" fill=\"" << fill
                << "\"/>\n";
        }
    }

    // refined zeros on the slice: pin the fixed coordinates by shrinking
    // their boxes, keep the two axes at plotting resolution
    SlicePlot out;
    if (admissible > 0) {
        std::vector<std::pair<double, double>> box = region.box();
        for (const auto& [i, v] : spec.fixed) box[static_cast<size_t>(i)] = {v, v};
        Region pinned(chart, std::move(box), region.seed());
        for (int i = 0; i < chart->dim(); ++i)
            pinned.with_resolution(i, (i == spec.axis_x || i == spec.axis_y)
                                          ? std::min(41, N)
                                          : 1);
        auto zeros = pinned.refined_zeros(coeff, 1e-9);
        out.locus_points = zeros.size();
        for (const auto& z : zeros) {
            double zx = z.point[static_cast<size_t>(spec.axis_x)];
            double zy = z.point[static_cast<size_t>(spec.axis_y)];
            double px = (zx - x0) / (x1 - x0 == 0 ? 1 : x1 - x0) * kCanvas;
            double py = kCanvas - (zy - y0) / (y1 - y0 == 0 ? 1 : y1 - y0) * kCanvas;
            svg << "<circle cx=\"" << num(px) << "\" cy=\"" << num(py)
                << "\" r=\"6\" fill=\"#000000\"/>\n";
        }
    }
    svg << "</svg>\n";
    out.svg = svg.str();
    out.csv = csv.str();
    return out;
}

}  // namespace lutzlab
