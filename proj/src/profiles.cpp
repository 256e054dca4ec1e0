#include "lutzlab/profiles.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace lutzlab {

PiecewiseProfile::PiecewiseProfile(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    if (pieces_.empty()) throw ProfileViolation("empty profile");
    for (size_t i = 0; i < pieces_.size(); ++i) {
        if (!(pieces_[i].x0 < pieces_[i].x1)) throw ProfileViolation("degenerate piece");
        if (i > 0 && std::abs(pieces_[i].x0 - pieces_[i - 1].x1) > 1e-12)
            throw ProfileViolation("pieces not contiguous");
    }
}

double PiecewiseProfile::eval(double x) const {
    const Piece* p = &pieces_.front();
    if (x <= pieces_.front().x0) {
        x = pieces_.front().x0;
    } else if (x >= pieces_.back().x1) {
        p = &pieces_.back();
        x = pieces_.back().x1;
    } else {
        for (const Piece& q : pieces_)
            if (x >= q.x0 && x <= q.x1) {
                p = &q;
                break;
            }
    }
    double dx = x - p->x0;
    return p->c[0] + dx * (p->c[1] + dx * (p->c[2] + dx * p->c[3]));
}

double PiecewiseProfile::deriv(double x) const {
    if (x < pieces_.front().x0 || x > pieces_.back().x1) return 0.0;
    const Piece* p = &pieces_.front();
    for (const Piece& q : pieces_)
        if (x >= q.x0 && x <= q.x1) {
            p = &q;
            break;
        }
    double dx = x - p->x0;
    return p->c[1] + dx * (2 * p->c[2] + dx * 3 * p->c[3]);
}

bool PiecewiseProfile::continuous(double tol) const {
    for (size_t i = 1; i < pieces_.size(); ++i) {
        const Piece& a = pieces_[i - 1];
        double dx = a.x1 - a.x0;
        double left = a.c[0] + dx * (a.c[1] + dx * (a.c[2] + dx * a.c[3]));
        if (std::abs(left - pieces_[i].c[0]) > tol) return false;
    }
    return true;
}

bool PiecewiseProfile::nondecreasing_on_grid(int samples) const {
    double prev = eval(lo());
    for (int k = 1; k < samples; ++k) {
        double x = lo() + (hi() - lo()) * k / (samples - 1);
        double v = eval(x);
        if (v < prev - 1e-12) return false;
        prev = v;
    }
    return true;
}

PiecewiseProfile PiecewiseProfile::hermite(const std::vector<std::array<double, 3>>& knots) {
    if (knots.size() < 2) throw ProfileViolation("hermite needs >= 2 knots");
    std::vector<Piece> ps;
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
        double x0 = knots[i][0], x1 = knots[i + 1][0];
        double y0 = knots[i][1], y1 = knots[i + 1][1];
        double m0 = knots[i][2], m1 = knots[i + 1][2];
        double h = x1 - x0;
        if (!(h > 0)) throw ProfileViolation("knots not increasing");
        Piece p;
        p.x0 = x0;
        p.x1 = x1;
        p.c[0] = y0;
        p.c[1] = m0;
        p.c[2] = (3 * (y1 - y0) / h - 2 * m0 - m1) / h;
        p.c[3] = (2 * (y0 - y1) / h + m0 + m1) / (h * h);
        ps.push_back(p);
    }
    return PiecewiseProfile(std::move(ps));
}

PiecewiseProfile PiecewiseProfile::flat(double x0, double x1, double y) {
    Piece p;
    p.x0 = x0;
    p.x1 = x1;
    p.c[0] = y;
    return PiecewiseProfile({p});
}

PiecewiseProfile PiecewiseProfile::smooth_step(double a, double b, double x1) {
    if (!(0 <= a && a < b && b <= x1)) throw ProfileViolation("bad smooth_step window");
    std::vector<Piece> ps;
    if (a > 0) {
        Piece p;
        p.x0 = 0;
        p.x1 = a;
        ps.push_back(p);
    }
    // Hermite 0 -> 1 with zero end slopes
    PiecewiseProfile mid = hermite({{a, 0.0, 0.0}, {b, 1.0, 0.0}});
    ps.push_back(mid.pieces()[0]);
    if (b < x1) {
        Piece p;
        p.x0 = b;
        p.x1 = x1;
        p.c[0] = 1.0;
        ps.push_back(p);
    }
    return PiecewiseProfile(std::move(ps));
}

PiecewiseProfile PiecewiseProfile::k_eps(double eps, double x1) {
    double knee = 1.0 - eps;
    std::vector<Piece> ps;
    Piece p0;
    p0.x0 = 0;
    p0.x1 = knee;
    ps.push_back(p0);
    Piece p1;
    p1.x0 = knee;
    p1.x1 = std::max(x1, knee + 1.0);
    p1.c[0] = 0.0;
    p1.c[1] = 1.0;
    ps.push_back(p1);
    return PiecewiseProfile(std::move(ps));
}

PiecewiseProfile PiecewiseProfile::shift_ramp(double a, double b, double drop, double x1) {
    if (!(0 < a && a < b && b <= x1)) throw ProfileViolation("bad shift_ramp window");
    double length = b - a;
    double w = std::min(0.1 * length, 0.015);
    // derivative: 1 on [0,a]; linear 1->m on [a,a+w]; m on [a+w,b-w];
    // linear m->1 on [b-w,b]; 1 beyond.  Total drop = (1-m)(length-w).
    double m = 1.0 - drop / (length - w);
    std::vector<Piece> ps;
    Piece id;
    id.x0 = 0;
    id.x1 = a;
    id.c[0] = 0;
    id.c[1] = 1;
    ps.push_back(id);
    // integrate the trapezoid derivative into quadratics
    auto quad = [](double x0, double x1v, double y0, double d0, double d1) {
        Piece p;
        p.x0 = x0;
        p.x1 = x1v;
        p.c[0] = y0;
        p.c[1] = d0;
        p.c[2] = (d1 - d0) / (2 * (x1v - x0));
        return p;
    };
    double y = a;
    Piece r1 = quad(a, a + w, y, 1.0, m);
    ps.push_back(r1);
    y = y + (1.0 + m) / 2 * w;
    Piece mid;
    mid.x0 = a + w;
    mid.x1 = b - w;
    mid.c[0] = y;
    mid.c[1] = m;
    ps.push_back(mid);
    y = y + m * (b - 2 * w - a);
    Piece r2 = quad(b - w, b, y, m, 1.0);
    ps.push_back(r2);
    y = y + (1.0 + m) / 2 * w;
    Piece tail;
    tail.x0 = b;
    tail.x1 = std::max(x1, b + 1.0);
    tail.c[0] = y;
    tail.c[1] = 1.0;
    ps.push_back(tail);
    return PiecewiseProfile(std::move(ps));
}

}  // namespace lutzlab
