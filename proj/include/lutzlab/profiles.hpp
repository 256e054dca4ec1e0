// profiles.hpp -- piecewise-cubic 1-variable profiles (bump/ramp/plateau data)
#pragma once

#include "lutzlab/errors.hpp"

#include <array>
#include <functional>
#include <vector>

namespace lutzlab {

// Piecewise cubic y = c0 + c1 dx + c2 dx^2 + c3 dx^3 with dx = x - x0 per
// piece; constant extension beyond the ends.
class PiecewiseProfile {
public:
    struct Piece {
        double x0 = 0.0, x1 = 0.0;
        double c[4] = {0, 0, 0, 0};
    };

    PiecewiseProfile() = default;
    explicit PiecewiseProfile(std::vector<Piece> pieces);

    double operator()(double x) const { return eval(x); }
    double eval(double x) const;
    double deriv(double x) const;
    double lo() const { return pieces_.front().x0; }
    double hi() const { return pieces_.back().x1; }
    const std::vector<Piece>& pieces() const { return pieces_; }

    // continuity of values at interior breakpoints
    bool continuous(double tol = 1e-12) const;
    bool nondecreasing_on_grid(int samples = 257) const;

    // --- builders ---
    // C1 cubic Hermite through knots (x, y, slope).
    static PiecewiseProfile hermite(const std::vector<std::array<double, 3>>& knots);
    // constant y on [x0, x1]
    static PiecewiseProfile flat(double x0, double x1, double y);
    // plateau 0 on [0, a], smooth rise, plateau 1 from b on (extends to x1)
    static PiecewiseProfile smooth_step(double a, double b, double x1);
    // k_eps of the disc model: 0 for s <= 1-eps, s-(1-eps) beyond
    static PiecewiseProfile k_eps(double eps, double x1);
    // identity-minus-drop ramp: y = x on [.., a], y = x - drop on [b, ..],
    // piecewise-quadratic monotone-slope connection (trapezoid derivative).
    static PiecewiseProfile shift_ramp(double a, double b, double drop, double x1);

private:
    std::vector<Piece> pieces_;
};

}  // namespace lutzlab
