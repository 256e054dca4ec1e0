#include "lutzlab/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

namespace lutzlab {

Region::Region(ChartPtr chart, std::vector<std::pair<double, double>> box, uint64_t seed)
    : chart_(std::move(chart)), box_(std::move(box)), seed_(seed) {
    if (static_cast<int>(box_.size()) != chart_->dim()) throw BadRegion("box size != dim");
    res_.resize(box_.size());
    for (int i = 0; i < chart_->dim(); ++i) {
        const Coordinate& c = chart_->coord(i);
        auto& [lo, hi] = box_[static_cast<size_t>(i)];
        if (!(lo <= hi)) throw BadRegion("empty box on " + c.name);
        if (c.kind == CoordKind::Radial && lo < 0) throw BadRegion("negative radial bound");
        if (c.kind == CoordKind::BoundedLinear && (lo < c.lo - 1e-12 || hi > c.hi + 1e-12))
            throw BadRegion("box exceeds kind range on " + c.name);
        res_[static_cast<size_t>(i)] = c.kind == CoordKind::Angle ? 8 : 25;
        if (lo == hi) res_[static_cast<size_t>(i)] = 1;
    }
}

Region& Region::with_resolution(int coord, int points) {
    if (points < 1) throw BadRegion("resolution < 1");
    res_.at(static_cast<size_t>(coord)) = points;
    return *this;
}

Region& Region::with_constraint(ScalarExpr expr_ge_zero) {
    require_same_chart(chart_, expr_ge_zero.chart(), "region constraint");
    compiled_constraints_.emplace_back(expr_ge_zero);
    constraints_.push_back(std::move(expr_ge_zero));
    return *this;
}

std::vector<double> Region::axis_samples(int coord) const {
    const auto& [lo, hi] = box_.at(static_cast<size_t>(coord));
    int n = res_.at(static_cast<size_t>(coord));
    std::vector<double> out;
    if (n == 1 || lo == hi) {
        out.push_back((lo + hi) / 2.0);
        return out;
    }
    for (int k = 0; k < n; ++k) out.push_back(lo + (hi - lo) * k / (n - 1));
    return out;
}

double Region::cell_size(int coord) const {
    const auto& [lo, hi] = box_.at(static_cast<size_t>(coord));
    int n = res_.at(static_cast<size_t>(coord));
    return n > 1 ? (hi - lo) / (n - 1) : (hi - lo);
}

double Region::midpoint(int coord) const {
    const auto& [lo, hi] = box_.at(static_cast<size_t>(coord));
    return (lo + hi) / 2.0;
}

bool Region::contains(const std::vector<double>& p, double tol) const {
    for (int i = 0; i < chart_->dim(); ++i) {
        const auto& [lo, hi] = box_[static_cast<size_t>(i)];
        double v = p[static_cast<size_t>(i)];
        if (chart_->coord(i).kind == CoordKind::Angle) continue;  // periodic
        if (v < lo - tol || v > hi + tol) return false;
    }
    return satisfies_constraints(p);
}

bool Region::satisfies_constraints(const std::vector<double>& p) const {
    for (size_t i = 0; i < constraints_.size(); ++i) {
        try {
            double v = compiled_constraints_[i].ok() ? compiled_constraints_[i].evaluate(p)
                                                     : constraints_[i].evaluate(p);
            if (v < -1e-9) return false;
        } catch (const DomainPole&) {
            return false;
        }
    }
    return true;
}

void Region::for_each_sample(const std::vector<int>& axes,
                             const std::function<void(const std::vector<double>&)>& fn) const {
    std::vector<double> p(static_cast<size_t>(chart_->dim()));
    for (int i = 0; i < chart_->dim(); ++i) p[static_cast<size_t>(i)] = midpoint(i);
    std::vector<std::vector<double>> samples;
    samples.reserve(axes.size());
    for (int a : axes) samples.push_back(axis_samples(a));
    std::vector<size_t> idx(axes.size(), 0);
    size_t total = 1;
    for (const auto& s : samples) total *= s.size();
    for (size_t count = 0; count < total; ++count) {
        for (size_t k = 0; k < axes.size(); ++k)
            p[static_cast<size_t>(axes[k])] = samples[k][idx[k]];
        if (satisfies_constraints(p)) fn(p);
        for (size_t k = axes.size(); k-- > 0;) {
            if (++idx[k] < samples[k].size()) break;
            idx[k] = 0;
        }
    }
}

std::vector<int> Region::active_axes(const ScalarExpr& e) const {
    // Only the axes the expression references: sweeping constraint-only axes
    // would blow the grid up without changing any sampled value.  Constraints
    // are still evaluated pointwise (unreferenced coordinates pinned at the
    // box midpoints).
    std::set<int> axes;
    for (int i = 0; i < chart_->dim(); ++i)
        if (e.references(i)) axes.insert(i);
    return {axes.begin(), axes.end()};
}

GridStats Region::grid_stats(const ScalarExpr& e, const OpaqueBindings* bindings) const {
    GridStats st;
    bool first = true;
    CompiledExpr fast(e);
    for_each_sample(active_axes(e), [&](const std::vector<double>& p) {
        double v;
        try {
            v = fast.ok() ? fast.evaluate(p) : e.evaluate(p, bindings);
        } catch (const DomainPole&) {
            return;
        }
        ++st.samples;
        if (first || v < st.min) {
            st.min = v;
            st.argmin = p;
        }
        if (first || v > st.max) {
            st.max = v;
            st.argmax = p;
        }
        first = false;
    });
    if (first) throw BadRegion("region has no admissible samples");
    return st;
}

namespace {

// Pattern search minimizing |e| inside a box around `start`.
std::pair<std::vector<double>, double> pattern_search(
    const ScalarExpr& e, const std::vector<int>& axes, std::vector<double> start,
    std::vector<double> radius, const Region& region, const OpaqueBindings* bindings) {
    CompiledExpr fast(e);
    auto value = [&](const std::vector<double>& p) -> double {
        try {
            return std::abs(fast.ok() ? fast.evaluate(p) : e.evaluate(p, bindings));
        } catch (const DomainPole&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    const std::vector<double> anchor = start;
    double best = value(start);
    std::vector<double> step = radius;
    for (int iter = 0; iter < 80; ++iter) {
        bool improved = false;
        for (size_t k = 0; k < axes.size(); ++k) {
            int a = axes[k];
            for (double dir : {+1.0, -1.0}) {
                std::vector<double> cand = start;
                cand[static_cast<size_t>(a)] += dir * step[k];
                // stay inside the anchor's cell: refinement must not slide
                // along a positive-dimensional zero set
                if (std::abs(cand[static_cast<size_t>(a)] - anchor[static_cast<size_t>(a)]) >
                    radius[k] + 1e-15)
                    continue;
                if (!region.contains(cand)) continue;
                double v = value(cand);
                if (v < best) {
                    best = v;
                    start = cand;
                    improved = true;
                }
            }
        }
        if (!improved)
            for (auto& s : step) s *= 0.5;
        if (*std::max_element(step.begin(), step.end()) < 1e-14) break;
    }
    return {start, best};
}

}  // namespace

std::vector<LocusPoint> Region::refined_zeros(const ScalarExpr& e, double tol,
                                              const OpaqueBindings* bindings) const {
    std::vector<int> axes = active_axes(e);
    if (axes.empty()) {
        std::vector<double> p(static_cast<size_t>(chart_->dim()));
        for (int i = 0; i < chart_->dim(); ++i) p[static_cast<size_t>(i)] = midpoint(i);
        double v = e.evaluate(p, bindings);
        if (std::abs(v) <= tol) return {{p, p, v}};
        return {};
    }
    // collect grid values keyed by the axis index tuple
    std::vector<std::vector<double>> samples;
    for (int a : axes) samples.push_back(axis_samples(a));
    std::vector<size_t> shape;
    for (const auto& s : samples) shape.push_back(s.size());
    size_t total = 1;
    for (size_t s : shape) total *= s;
    std::vector<double> values(total, std::numeric_limits<double>::infinity());
    std::vector<double> base(static_cast<size_t>(chart_->dim()));
    for (int i = 0; i < chart_->dim(); ++i) base[static_cast<size_t>(i)] = midpoint(i);

    auto point_of = [&](size_t flat) {
        std::vector<double> p = base;
        for (size_t k = axes.size(); k-- > 0;) {
            p[static_cast<size_t>(axes[k])] = samples[k][flat % shape[k]];
            flat /= shape[k];
        }
        return p;
    };
    CompiledExpr fast(e);
    for (size_t f = 0; f < total; ++f) {
        std::vector<double> p = point_of(f);
        if (!satisfies_constraints(p)) continue;
        try {
            values[f] = std::abs(fast.ok() ? fast.evaluate(p) : e.evaluate(p, bindings));
        } catch (const DomainPole&) {
        }
    }

    // Refinement seeds: points whose value is dominated by the per-cell
    // variation of the function (the value could plausibly reach zero inside
    // the surrounding cell).  Plain local minima would miss positive-
    // dimensional zero sets, where the function drifts along the stratum.
    auto is_seed = [&](size_t flat) {
        double v = values[flat];
        if (!std::isfinite(v)) return false;
        size_t rem = flat;
        std::vector<size_t> idx(axes.size());
        for (size_t k = axes.size(); k-- > 0;) {
            idx[k] = rem % shape[k];
            rem /= shape[k];
        }
        double variation = 0.0;
        for (size_t k = 0; k < axes.size(); ++k) {
            size_t stride = 1;
            for (size_t j = k + 1; j < axes.size(); ++j) stride *= shape[j];
            if (idx[k] > 0 && std::isfinite(values[flat - stride]))
                variation = std::max(variation, std::abs(values[flat - stride] - v));
            if (idx[k] + 1 < shape[k] && std::isfinite(values[flat + stride]))
                variation = std::max(variation, std::abs(values[flat + stride] - v));
        }
        return v <= 1.5 * variation + tol;
    };

    std::vector<LocusPoint> zeros;
    for (size_t f = 0; f < total; ++f) {
        if (!is_seed(f)) continue;
        std::vector<double> anchor = point_of(f);
        std::vector<double> radius;
        for (int a : axes) radius.push_back(cell_size(a));
        auto [pt, v] = pattern_search(e, axes, anchor, radius, *this, bindings);
        if (v > tol) continue;
        // merge refinements that landed in the same half-cell
        bool dup = false;
        for (const auto& z : zeros) {
            bool close = true;
            for (size_t k = 0; k < axes.size(); ++k) {
                double d = std::abs(z.point[static_cast<size_t>(axes[k])] -
                                    pt[static_cast<size_t>(axes[k])]);
                if (d > 0.5 * cell_size(axes[k])) {
                    close = false;
                    break;
                }
            }
            if (close) {
                dup = true;
                break;
            }
        }
        if (!dup) zeros.push_back({pt, anchor, v});
    }
    return zeros;
}

}  // namespace lutzlab
