// chart.hpp -- coordinate charts underlying all expressions and forms
#pragma once

#include "lutzlab/errors.hpp"

#include <memory>
#include <random>
#include <string>
#include <vector>

namespace lutzlab {

enum class CoordKind { Angle, Radial, Linear, BoundedLinear };

struct Coordinate {
    std::string name;
    CoordKind kind = CoordKind::Linear;
    double lo = 0.0;   // BoundedLinear only
    double hi = 0.0;
};

class Chart;
using ChartPtr = std::shared_ptr<const Chart>;

class Chart {
public:
    explicit Chart(std::vector<Coordinate> coords);

    int dim() const { return static_cast<int>(coords_.size()); }
    const Coordinate& coord(int i) const { return coords_.at(static_cast<size_t>(i)); }
    const std::vector<Coordinate>& coords() const { return coords_; }
    int index(const std::string& name) const;  // -1 if absent

    bool same_as(const Chart& other) const;

    // Default sampling window per coordinate, used by is_zero and oracles.
    // Radial coordinates stay off the axis, bounded ones keep a pole margin.
    std::pair<double, double> sample_window(int i) const;
    std::vector<double> sample_point(std::mt19937_64& rng) const;

    // Named factories for the charts used throughout.
    static ChartPtr cylinder(int n);        // phi, r1, th1, ..., rn, thn
    static ChartPtr cylinder_line(int n);   // z, r1, th1, ..., rn, thn
    static ChartPtr handle(int m);          // p1, q1, ..., pm, qm, z, phi
    static ChartPtr giroux(int n);          // s1, th1, ..., sn, thn
    static ChartPtr giroux_contact(int n);  // phi, s1, th1, ..., sn, thn
    static ChartPtr torus_disk(int n);      // phi, th1..thn, s1..sn  (pre-Lagrangian nbhd)
    static ChartPtr torus_sphere(int n);    // phi, th1..thn, rho, psi1..psi_{n-1}
    static ChartPtr otw(int n);             // z, r1, ph1, ..., r_{n-1}, ph_{n-1}, r, ph

    static ChartPtr make(std::vector<Coordinate> coords) {
        return std::make_shared<Chart>(std::move(coords));
    }

private:
    std::vector<Coordinate> coords_;
};

inline void require_same_chart(const ChartPtr& a, const ChartPtr& b, const char* what) {
    if (!a || !b || !a->same_as(*b)) throw ChartMismatch(what);
}

}  // namespace lutzlab
