#include "lutzlab/chart.hpp"

#include <cmath>
#include <set>

namespace lutzlab {

namespace {
constexpr double kTwoPi = 6.283185307179586476925287;
}

Chart::Chart(std::vector<Coordinate> coords) : coords_(std::move(coords)) {
    std::set<std::string> names;
    for (const auto& c : coords_) {
        if (!names.insert(c.name).second) throw BadAssignment("duplicate coordinate name " + c.name);
        if (c.kind == CoordKind::BoundedLinear && !(c.lo < c.hi))
            throw BadAssignment("empty bounds on " + c.name);
    }
}

int Chart::index(const std::string& name) const {
    for (int i = 0; i < dim(); ++i)
        if (coords_[static_cast<size_t>(i)].name == name) return i;
    return -1;
}

bool Chart::same_as(const Chart& other) const {
    if (dim() != other.dim()) return false;
    for (int i = 0; i < dim(); ++i) {
        const auto& a = coords_[static_cast<size_t>(i)];
        const auto& b = other.coords_[static_cast<size_t>(i)];
        if (a.name != b.name || a.kind != b.kind) return false;
        if (a.kind == CoordKind::BoundedLinear && (a.lo != b.lo || a.hi != b.hi)) return false;
    }
    return true;
}

std::pair<double, double> Chart::sample_window(int i) const {
    const auto& c = coord(i);
    switch (c.kind) {
        case CoordKind::Angle: return {0.0, kTwoPi};
        case CoordKind::Radial: return {0.1, 2.0};
        case CoordKind::Linear: return {-2.0, 2.0};
        case CoordKind::BoundedLinear: {
            double margin = 1e-3 * (c.hi - c.lo);
            return {c.lo + margin, c.hi - margin};
        }
    }
    return {0.0, 1.0};
}

std::vector<double> Chart::sample_point(std::mt19937_64& rng) const {
    std::vector<double> p(static_cast<size_t>(dim()));
    for (int i = 0; i < dim(); ++i) {
        auto [lo, hi] = sample_window(i);
        std::uniform_real_distribution<double> d(lo, hi);
        p[static_cast<size_t>(i)] = d(rng);
    }
    return p;
}

ChartPtr Chart::cylinder(int n) {
    std::vector<Coordinate> cs;
    cs.push_back({"phi", CoordKind::Angle});
    for (int i = 1; i <= n; ++i) {
        cs.push_back({"r" + std::to_string(i), CoordKind::Radial});
        cs.push_back({"th" + std::to_string(i), CoordKind::Angle});
    }
    return make(std::move(cs));
}

ChartPtr Chart::cylinder_line(int n) {
    std::vector<Coordinate> cs;
    cs.push_back({"z", CoordKind::Linear});
    for (int i = 1; i <= n; ++i) {
        cs.push_back({"r" + std::to_string(i), CoordKind::Radial});
        cs.push_back({"th" + std::to_string(i), CoordKind::Angle});
    }
    return make(std::move(cs));
}

ChartPtr Chart::handle(int m) {
    std::vector<Coordinate> cs;
    for (int i = 1; i <= m; ++i) {
        cs.push_back({"p" + std::to_string(i), CoordKind::Linear});
        cs.push_back({"q" + std::to_string(i), CoordKind::Linear});
    }
    cs.push_back({"z", CoordKind::Linear});
    cs.push_back({"phi", CoordKind::Angle});
    return make(std::move(cs));
}

ChartPtr Chart::giroux(int n) {
    std::vector<Coordinate> cs;
    const double h = std::acos(-1.0) / 2.0;
    for (int i = 1; i <= n; ++i) {
        cs.push_back({"s" + std::to_string(i), CoordKind::BoundedLinear, -h, h});
        cs.push_back({"th" + std::to_string(i), CoordKind::Angle});
    }
    return make(std::move(cs));
}

ChartPtr Chart::giroux_contact(int n) {
    std::vector<Coordinate> cs;
    const double h = std::acos(-1.0) / 2.0;
    cs.push_back({"phi", CoordKind::Angle});
    for (int i = 1; i <= n; ++i) {
        cs.push_back({"s" + std::to_string(i), CoordKind::BoundedLinear, -h, h});
        cs.push_back({"th" + std::to_string(i), CoordKind::Angle});
    }
    return make(std::move(cs));
}

ChartPtr Chart::torus_disk(int n) {
    std::vector<Coordinate> cs;
    cs.push_back({"phi", CoordKind::Angle});
    for (int i = 1; i <= n; ++i) cs.push_back({"th" + std::to_string(i), CoordKind::Angle});
    for (int i = 1; i <= n; ++i) cs.push_back({"s" + std::to_string(i), CoordKind::Linear});
    return make(std::move(cs));
}

ChartPtr Chart::torus_sphere(int n) {
    std::vector<Coordinate> cs;
    cs.push_back({"phi", CoordKind::Angle});
    for (int i = 1; i <= n; ++i) cs.push_back({"th" + std::to_string(i), CoordKind::Angle});
    cs.push_back({"rho", CoordKind::Radial});
    for (int i = 1; i < n; ++i) cs.push_back({"psi" + std::to_string(i), CoordKind::Angle});
    return make(std::move(cs));
}

ChartPtr Chart::otw(int n) {
    std::vector<Coordinate> cs;
    cs.push_back({"z", CoordKind::Linear});
    for (int i = 1; i < n; ++i) {
        cs.push_back({"r" + std::to_string(i), CoordKind::Radial});
        cs.push_back({"ph" + std::to_string(i), CoordKind::Angle});
    }
    cs.push_back({"r", CoordKind::Radial});
    cs.push_back({"ph", CoordKind::Angle});
    return make(std::move(cs));
}

}  // namespace lutzlab
