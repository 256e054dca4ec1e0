// region.hpp -- sampling regions: box + inequality constraints + grid
#pragma once

#include "lutzlab/forms.hpp"
#include "lutzlab/scalar.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace lutzlab {

struct GridStats {
    double min = 0.0, max = 0.0;
    std::vector<double> argmin, argmax;
    size_t samples = 0;
};

struct LocusPoint {
    std::vector<double> point;   // refined location
    std::vector<double> anchor;  // originating grid point
    double value = 0.0;
};

class Region {
public:
    Region(ChartPtr chart, std::vector<std::pair<double, double>> box, uint64_t seed = 42);

    const ChartPtr& chart() const { return chart_; }
    const std::vector<std::pair<double, double>>& box() const { return box_; }
    uint64_t seed() const { return seed_; }

    Region& with_resolution(int coord, int points);
    Region& with_constraint(ScalarExpr expr_ge_zero);
    const std::vector<ScalarExpr>& constraints() const { return constraints_; }
    int resolution(int coord) const { return res_.at(static_cast<size_t>(coord)); }

    std::vector<double> axis_samples(int coord) const;
    double cell_size(int coord) const;
    double midpoint(int coord) const;
    bool contains(const std::vector<double>& p, double tol = 1e-9) const;

    // Iterate the product grid restricted to the coordinates in `axes`
    // (others pinned at midpoints); callback gets the full-dimension point.
    void for_each_sample(const std::vector<int>& axes,
                         const std::function<void(const std::vector<double>&)>& fn) const;

    // Axes referenced by an expression (plus constraint axes).
    std::vector<int> active_axes(const ScalarExpr& e) const;

    GridStats grid_stats(const ScalarExpr& e, const OpaqueBindings* bindings = nullptr) const;

    // Locus finder: local minima of |e| on the grid, refined inside their
    // cells by pattern search; points with refined |value| <= tol survive.
    std::vector<LocusPoint> refined_zeros(const ScalarExpr& e, double tol = 1e-9,
                                          const OpaqueBindings* bindings = nullptr) const;

private:
    ChartPtr chart_;
    std::vector<std::pair<double, double>> box_;
    std::vector<int> res_;
    std::vector<ScalarExpr> constraints_;
    std::vector<CompiledExpr> compiled_constraints_;
    uint64_t seed_;

    bool satisfies_constraints(const std::vector<double>& p) const;
};

}  // namespace lutzlab
