#include "lutzlab/handles.hpp"

#include <cmath>
#include <sstream>

namespace lutzlab {

namespace {

Rational rat_from(double v) {
    long long num = std::llround(v * 1024.0);
    if (std::abs(v * 1024.0 - static_cast<double>(num)) > 1e-9)
        throw BadIndex("handle constant not representable; use multiples of 1/1024");
    return Rational(num, 1024);
}

}  // namespace

HandleSpace make_handle(int m, int k) {
    if (m < 1 || k < 1 || k > m) throw BadIndex("make_handle needs 1 <= k <= m");
    HandleSpace h;
    h.m = m;
    h.k = k;
    h.chart = Chart::handle(m);
    const ChartPtr& c = h.chart;

    h.omega0 = DifferentialForm(c, 2);
    for (int i = 1; i <= m; ++i)
        h.omega0.set_component({h.p_idx(i), h.q_idx(i)}, sx_const(c, 1));
    h.omega0.set_component({h.z_idx(), h.phi_idx()}, sx_const(c, 1));

    h.liouville = VectorField(c);
    for (int i = 1; i <= k; ++i) {
        h.liouville.set_component(h.q_idx(i), -sx_coord(c, h.q_idx(i)));
        h.liouville.set_component(h.p_idx(i), sx_coord(c, h.p_idx(i)).scaled(2));
    }
    for (int i = k + 1; i <= m; ++i) {
        h.liouville.set_component(h.q_idx(i), sx_coord(c, h.q_idx(i)).scaled(Rational(1, 2)));
        h.liouville.set_component(h.p_idx(i), sx_coord(c, h.p_idx(i)).scaled(Rational(1, 2)));
    }
    h.liouville.set_component(h.z_idx(), sx_coord(c, h.z_idx()));

    if (!ext_d(h.omega0).is_symbolic_zero()) throw BadIndex("omega0 not closed");
    if (!(lie_derivative(h.liouville, h.omega0) == h.omega0))
        throw BadIndex("X_k is not Liouville for omega0");
    return h;
}

HandleRegion make_handle_region(const HandleSpace& h, double A, double B, double c) {
    HandleRegion hr;
    hr.k = h.k;
    hr.A = A;
    hr.B = B;
    hr.c = c;
    const ChartPtr& ch = h.chart;
    Rational rA = rat_from(A), rB = rat_from(B);
    ScalarExpr f = ScalarExpr::zero(ch), g = ScalarExpr::zero(ch);
    for (int i = 1; i <= h.m; ++i) {
        ScalarExpr p2 = sx_coord(ch, h.p_idx(i), 2);
        ScalarExpr q2 = sx_coord(ch, h.q_idx(i), 2);
        if (i <= h.k) {
            f = f + p2 - q2.scaled(Rational(1, 2));
            g = g - q2.scaled(rA) + p2.scaled(rB);
        } else {
            f = f + (p2 + q2).scaled(Rational(1, 4));
            g = g + (p2 + q2).scaled(rB);
        }
    }
    ScalarExpr z2 = sx_coord(ch, h.z_idx(), 2);
    f = f + z2.scaled(Rational(1, 2));
    g = g + z2.scaled(rB);
    hr.f_k = f;
    hr.g_k = g;
    return hr;
}

MembershipResult handle_membership(const HandleRegion& hr, const std::vector<double>& point) {
    constexpr double tol = 1e-9;
    double f = hr.f_k.evaluate(point);
    double g = hr.g_k.evaluate(point);
    MembershipResult out;
    bool f_ok = f >= -1.0 - tol;
    bool g_ok = g <= hr.c + tol;
    if (!f_ok || !g_ok) {
        out.where = Membership::Outside;
        return out;
    }
    if (std::abs(f + 1.0) <= tol) {
        out.where = Membership::Boundary;
        out.face = "W-";
        return out;
    }
    if (std::abs(g - hr.c) <= tol) {
        out.where = Membership::Boundary;
        out.face = "Vc";
        return out;
    }
    out.where = Membership::Inside;
    return out;
}

DifferentialForm induced_form(const HandleSpace& h, int coord, const SubstConst& value,
                              Restriction* out_rest) {
    DifferentialForm ixo = interior(h.liouville, h.omega0);
    // transversality: the Liouville component along `coord` must not vanish
    // after the substitution
    Restriction rest = make_restriction(h.chart, {{coord, value}});
    ScalarExpr comp = h.liouville.component(coord);
    ScalarExpr at = comp.substitute(rest.assignment, rest.subchart, rest.index_map);
    if (at.is_symbolic_zero())
        throw NotTransverse("Liouville field tangent to the level set of " +
                            h.chart->coord(coord).name);
    if (out_rest) *out_rest = rest;
    return restrict_form(ixo, rest);
}

// ---------------------------------------------------------------------------
// attaching / belt reports

namespace {

struct ChartCase {
    std::string label;
    std::string coord;   // coordinate fixed inside the contact slice
    int sign;            // +1 / -1
};

// printed characteristic-foliation fields, transcribed per chart family.
// `sub` is the chart of the hypersurface; m the pair count.
VectorField printed_field(const std::string& family, const ChartPtr& sub, int m, int chart_sign) {
    VectorField v(sub);
    auto idx = [&](const std::string& name) { return sub->index(name); };
    if (family == "p1") {
        // +/- { z dz + 1/2 sum_{i>=2} (p_i dp_i + q_i dq_i) }
        Rational s(chart_sign);
        v.set_component(idx("z"), sx_coord(sub, idx("z")).scaled(s));
        for (int i = 2; i <= m; ++i) {
            v.set_component(idx("p" + std::to_string(i)),
                            sx_coord(sub, idx("p" + std::to_string(i))).scaled(s / 2));
            v.set_component(idx("q" + std::to_string(i)),
                            sx_coord(sub, idx("q" + std::to_string(i))).scaled(s / 2));
        }
    } else if (family == "pi") {
        // -d/dq_i + 1/2 d/dp_1   (printed without branch signs)
        v.set_component(idx("q2"), sx_const(sub, -1));
        v.set_component(idx("p1"), sx_const(sub, Rational(1, 2)));
    } else if (family == "qi") {
        // d/dp_i + 1/2 d/dp_1
        v.set_component(idx("p2"), sx_const(sub, 1));
        v.set_component(idx("p1"), sx_const(sub, Rational(1, 2)));
    } else if (family == "z") {
        // -d/dphi + d/dp_1
        v.set_component(idx("phi"), sx_const(sub, -1));
        v.set_component(idx("p1"), sx_const(sub, 1));
    } else if (family == "belt-index-i") {
        // -+ 1/2 sum_{i>=2}(p_i dp_i + q_i dq_i) + z dz
        Rational s(-chart_sign);
        for (int i = 2; i <= m; ++i) {
            v.set_component(idx("p" + std::to_string(i)),
                            sx_coord(sub, idx("p" + std::to_string(i))).scaled(s / 2));
            v.set_component(idx("q" + std::to_string(i)),
                            sx_coord(sub, idx("q" + std::to_string(i))).scaled(s / 2));
        }
        v.set_component(idx("z"), sx_coord(sub, idx("z")));
    } else if (family == "belt-index-2") {
        Rational s(-chart_sign);
        v.set_component(idx("p2"), sx_coord(sub, idx("p2")).scaled(s / 2));
        v.set_component(idx("q2"), sx_coord(sub, idx("q2")).scaled(s / 2));
        v.set_component(idx("z"), sx_coord(sub, idx("z")));
    }
    return v;
}

// solve the defining equation on the sub-chart for both orientations and
// report which reproduces `printed` up to the (m-1)! wedge normalization.
struct FoliationOutcome {
    VectorField computed;        // for the + orientation of the chart volume
    bool defining_ok = false;    // V . Omega == beta, symbolically (by construction)
    int matching_orientation = 0;  // +1 / -1 / 0 when no match
    bool scaled_match = false;
};

FoliationOutcome solve_and_compare(const DifferentialForm& alpha_sub, int m,
                                   const VectorField& printed) {
    const ChartPtr& sub = alpha_sub.chart();
    DifferentialForm beta = wedge(alpha_sub, wedge_pow(ext_d(alpha_sub), m - 1));
    DifferentialForm vol = coordinate_volume(sub);
    FoliationOutcome out;
    out.computed = char_foliation(beta, vol);
    // verify the defining equation V . Omega = beta symbolically
    DifferentialForm check = interior(out.computed, vol);
    out.defining_ok = check == beta;
    VectorField expect = printed.scaled(factorial(m - 1));
    if (out.computed == expect) {
        out.matching_orientation = +1;
        out.scaled_match = true;
    } else if (out.computed == expect.scaled(-1)) {
        out.matching_orientation = -1;
        out.scaled_match = true;
    }
    return out;
}

}  // namespace

NamedConstruction attaching_belt_reports(int m) {
    if (m < 2) throw BadIndex("attaching/belt reports need m >= 2");
    NamedConstruction nc;
    nc.name = "round-handle";
    HandleSpace h = make_handle(m, 1);
    nc.chart = h.chart;
    nc.forms["omega0"] = h.omega0;
    nc.fields["X1"] = h.liouville;

    // --- attaching side: A_+/- = {q1 = +/-1} ---
    for (int a_sign : {+1, -1}) {
        Restriction a_rest;
        DifferentialForm alpha = induced_form(h, h.q_idx(1), SubstConst::exact(a_sign), &a_rest);
        const ChartPtr& A = a_rest.subchart;
        std::string a_tag = a_sign > 0 ? "A+" : "A-";

        // printed induced form: +/- dp1 + z dphi + 1/2 sum_{i>=2}(p dq - q dp)
        DifferentialForm expect(A, 1);
        expect.set_component({A->index("p1")}, sx_const(A, a_sign));
        expect.set_component({A->index("phi")}, sx_coord(A, A->index("z")));
        for (int i = 2; i <= m; ++i) {
            expect.add_component({A->index("q" + std::to_string(i))},
                                 sx_coord(A, A->index("p" + std::to_string(i))).scaled(Rational(1, 2)));
            expect.add_component({A->index("p" + std::to_string(i))},
                                 sx_coord(A, A->index("q" + std::to_string(i))).scaled(Rational(-1, 2)));
        }
        nc.check_symbolic("induced-form-" + a_tag, alpha == expect, alpha.str());

        // dividing set: alpha(X_att) == +/- p1 with the transverse contact field
        VectorField xatt(A);
        xatt.set_component(A->index("p1"), sx_coord(A, A->index("p1")));
        for (int i = 2; i <= m; ++i) {
            xatt.set_component(A->index("p" + std::to_string(i)),
                               sx_coord(A, A->index("p" + std::to_string(i))).scaled(Rational(1, 2)));
            xatt.set_component(A->index("q" + std::to_string(i)),
                               sx_coord(A, A->index("q" + std::to_string(i))).scaled(Rational(1, 2)));
        }
        xatt.set_component(A->index("z"), sx_coord(A, A->index("z")));
        ScalarExpr pair = pairing(alpha, xatt);
        nc.check_symbolic("attaching-pairing-" + a_tag,
                          pair == sx_coord(A, A->index("p1")).scaled(a_sign), pair.str());

        if (a_sign > 0) {
            // X_att is a contact field: L_X alpha = alpha
            nc.check_symbolic("attaching-X-contact-" + a_tag,
                              lie_derivative(xatt, alpha) == alpha);
            // grid zero set {p1 = 0} on the side chart {p2 = 1}
            auto rest2 = make_restriction(A, {{A->index("p2"), SubstConst::exact(1)}});
            std::vector<std::pair<double, double>> box;
            for (int i = 0; i < rest2.subchart->dim(); ++i) {
                if (rest2.subchart->coord(i).kind == CoordKind::Angle)
                    box.push_back({0.0, 2 * 3.141592653589793});
                else
                    box.push_back({-1.0, 1.0});
            }
            Region reg(rest2.subchart, std::move(box));
            DividingSetReport dsr = dividing_set(alpha, xatt, rest2, reg);
            bool zeros_on_p1 = !dsr.zeros.empty();
            for (const auto& zp : dsr.zeros)
                zeros_on_p1 = zeros_on_p1 &&
                              std::abs(zp.point[static_cast<size_t>(rest2.subchart->index("p1"))]) <
                                  reg.cell_size(rest2.subchart->index("p1"));
            nc.certificates.push_back(dsr.cert);
            nc.check_grid("attaching-dividing-set-p1-zero",
                          zeros_on_p1 && dsr.positive_samples > 0 && dsr.negative_samples > 0,
                          dsr.cert.detail);
        }

        // characteristic foliations on the printed charts inside A_+/-
        struct Side {
            std::string family;
            std::string coord;
            int sign;
        };
        std::vector<Side> sides = {{"p1", "p1", +1}, {"p1", "p1", -1}, {"pi", "p2", +1},
                                   {"qi", "q2", +1}, {"z", "z", +1}};
        for (const auto& s : sides) {
            auto rest = make_restriction(A, {{A->index(s.coord), SubstConst::exact(s.sign)}});
            DifferentialForm alpha_side = restrict_form(alpha, rest);
            VectorField printed = printed_field(s.family, rest.subchart, m, s.sign);
            FoliationOutcome fo = solve_and_compare(alpha_side, m, printed);
            std::string tag = a_tag + "/" + s.coord + (s.sign > 0 ? "+" : "-");
            nc.check_symbolic("defining-equation-" + tag, fo.defining_ok);
            if (a_sign > 0) {
                nc.check_symbolic("printed-V-match-" + tag, fo.scaled_match,
                                  fo.scaled_match
                                      ? ("orientation " +
                                         std::to_string(fo.matching_orientation) +
                                         ", scale (m-1)!")
                                      : ("computed " + fo.computed.str()));
            } else {
                nc.report("printed-V-" + tag,
                          fo.scaled_match
                              ? "matches with orientation " + std::to_string(fo.matching_orientation)
                              : "no orientation matches; computed " + fo.computed.str());
            }
        }
    }

    // --- belt side charts B^{p_i}_-/+, B^{q_i}_-/+, B^z_-/+ on the full
    // handle chart: induced forms against the printed formulas, and the
    // belt-core foliations (printed (1/2) dp1, (1/2) dp1, dp1)
    {
        struct BeltSide {
            std::string label;
            int coord;
            int sign;
        };
        std::vector<BeltSide> sides = {{"Bp2", h.p_idx(2), +1}, {"Bp2", h.p_idx(2), -1},
                                       {"Bq2", h.q_idx(2), +1}, {"Bq2", h.q_idx(2), -1},
                                       {"Bz", h.z_idx(), +1},   {"Bz", h.z_idx(), -1}};
        for (const auto& s : sides) {
            Restriction rest;
            DifferentialForm alpha = induced_form(h, s.coord, SubstConst::exact(s.sign), &rest);
            const ChartPtr& B = rest.subchart;
            std::string tag = s.label + (s.sign > 0 ? "+" : "-");

            DifferentialForm expect(B, 1);
            expect.set_component({B->index("p1")}, sx_coord(B, B->index("q1")));
            expect.set_component({B->index("q1")}, sx_coord(B, B->index("p1")).scaled(2));
            for (int i = 2; i <= m; ++i) {
                if (h.p_idx(i) == s.coord || h.q_idx(i) == s.coord) continue;
                expect.add_component(
                    {B->index("q" + std::to_string(i))},
                    sx_coord(B, B->index("p" + std::to_string(i))).scaled(Rational(1, 2)));
                expect.add_component(
                    {B->index("p" + std::to_string(i))},
                    sx_coord(B, B->index("q" + std::to_string(i))).scaled(Rational(-1, 2)));
            }
            if (s.label == "Bp2") {
                // +/- (1/2) dq_i and z dphi
                expect.add_component({B->index("q2")}, sx_const(B, Rational(s.sign, 2)));
                expect.set_component({B->index("phi")}, sx_coord(B, B->index("z")));
            } else if (s.label == "Bq2") {
                // -/+ (1/2) dp_i and z dphi
                expect.add_component({B->index("p2")}, sx_const(B, Rational(-s.sign, 2)));
                expect.set_component({B->index("phi")}, sx_coord(B, B->index("z")));
            } else {
                // +/- dphi
                expect.set_component({B->index("phi")}, sx_const(B, s.sign));
            }
            nc.check_symbolic("induced-form-" + tag, alpha == expect, alpha.str());

            // belt core {q1 = 0} in this chart
            auto bc = make_restriction(B, {{B->index("q1"), SubstConst::exact(0)}});
            DifferentialForm alpha_bc = restrict_form(alpha, bc);
            VectorField printed(bc.subchart);
            if (s.label == "Bz")
                printed.set_component(bc.subchart->index("p1"), sx_const(bc.subchart, 1));
            else
                printed.set_component(bc.subchart->index("p1"),
                                      sx_const(bc.subchart, Rational(1, 2)));
            FoliationOutcome fo = solve_and_compare(alpha_bc, m, printed);
            nc.check_symbolic("belt-defining-equation-" + tag, fo.defining_ok);
            nc.check_symbolic("belt-printed-V-" + tag, fo.scaled_match,
                              fo.scaled_match ? ("orientation " +
                                                 std::to_string(fo.matching_orientation) +
                                                 ", scale (m-1)!")
                                              : ("computed " + fo.computed.str()));
        }
    }

    // --- belt side: B^1_+/- = {p1 = +/-1}, belt core {q1 = 0} ---
    for (int b_sign : {+1, -1}) {
        Restriction b_rest;
        DifferentialForm alpha = induced_form(h, h.p_idx(1), SubstConst::exact(b_sign), &b_rest);
        const ChartPtr& B = b_rest.subchart;
        std::string b_tag = b_sign > 0 ? "B1+" : "B1-";

        DifferentialForm expect(B, 1);
        expect.set_component({B->index("q1")}, sx_const(B, 2 * b_sign));
        expect.set_component({B->index("phi")}, sx_coord(B, B->index("z")));
        for (int i = 2; i <= m; ++i) {
            expect.add_component({B->index("q" + std::to_string(i))},
                                 sx_coord(B, B->index("p" + std::to_string(i))).scaled(Rational(1, 2)));
            expect.add_component({B->index("p" + std::to_string(i))},
                                 sx_coord(B, B->index("q" + std::to_string(i))).scaled(Rational(-1, 2)));
        }
        nc.check_symbolic("induced-form-" + b_tag, alpha == expect, alpha.str());

        // belt core {q1 = 0}: computed V against both printed readings
        auto rest = make_restriction(B, {{B->index("q1"), SubstConst::exact(0)}});
        DifferentialForm alpha_bc = restrict_form(alpha, rest);
        VectorField printed_i = printed_field("belt-index-i", rest.subchart, m, b_sign);
        VectorField printed_2 = printed_field("belt-index-2", rest.subchart, m, b_sign);
        FoliationOutcome fo_i = solve_and_compare(alpha_bc, m, printed_i);
        FoliationOutcome fo_2 = solve_and_compare(alpha_bc, m, printed_2);
        nc.check_symbolic("belt-defining-equation-" + b_tag, fo_i.defining_ok);
        std::ostringstream os;
        os << "index-i reading: "
           << (fo_i.scaled_match ? "matches with orientation " +
                                       std::to_string(fo_i.matching_orientation)
                                 : "no match")
           << "; index-2 reading: "
           << (fo_2.scaled_match ? "matches with orientation " +
                                       std::to_string(fo_2.matching_orientation)
                                 : "no match")
           << "; computed V = " << fo_i.computed.str();
        nc.report("belt-core-V-" + b_tag, os.str());

        // belt dividing set: the contact field of H = (+/-)2 q1 + z + c is
        // X = (q1 +/- c/2) dq1 + 1/2 sum (p dp + q dq) + z dz + dphi, which is
        // transverse to the belt core for c != 0 and pairs to z + c there
        Rational c_off(1, 2);
        VectorField xbelt(B);
        xbelt.set_component(B->index("q1"),
                            sx_coord(B, B->index("q1")) +
                                sx_const(B, c_off / 2 * b_sign));
        for (int i = 2; i <= m; ++i) {
            xbelt.set_component(B->index("p" + std::to_string(i)),
                                sx_coord(B, B->index("p" + std::to_string(i))).scaled(Rational(1, 2)));
            xbelt.set_component(B->index("q" + std::to_string(i)),
                                sx_coord(B, B->index("q" + std::to_string(i))).scaled(Rational(1, 2)));
        }
        xbelt.set_component(B->index("z"), sx_coord(B, B->index("z")));
        xbelt.set_component(B->index("phi"), sx_const(B, 1));
        nc.check_symbolic("belt-X-contact-" + b_tag, lie_derivative(xbelt, alpha) == alpha);
        ScalarExpr pair = pairing(alpha, xbelt);
        ScalarExpr pair_expect = sx_coord(B, B->index("q1")).scaled(2 * b_sign) +
                                 sx_coord(B, B->index("z")) + sx_const(B, c_off);
        nc.check_symbolic("belt-pairing-" + b_tag, pair == pair_expect, pair.str());

        if (b_sign > 0) {
            std::vector<std::pair<double, double>> box;
            for (int i = 0; i < rest.subchart->dim(); ++i) {
                if (rest.subchart->coord(i).kind == CoordKind::Angle)
                    box.push_back({0.0, 2 * 3.141592653589793});
                else
                    box.push_back({-1.0, 1.0});
            }
            Region reg(rest.subchart, std::move(box));
            DividingSetReport dsr = dividing_set(alpha, xbelt, rest, reg);
            bool zeros_on_equator = !dsr.zeros.empty();
            double c_val = to_double(c_off);
            for (const auto& zp : dsr.zeros)
                zeros_on_equator =
                    zeros_on_equator &&
                    std::abs(zp.point[static_cast<size_t>(rest.subchart->index("z"))] + c_val) <
                        reg.cell_size(rest.subchart->index("z"));
            nc.certificates.push_back(dsr.cert);
            nc.check_grid("belt-dividing-set", zeros_on_equator, dsr.cert.detail);
            nc.report("belt-dividing-set-pattern",
                      "zero set {z = -1/2} on the belt core (the transverse contact field "
                      "offsets the equator by its Hamiltonian constant): the "
                      "S^(2m-2) x S^1 pattern");
        }
    }
    return nc;
}

NamedConstruction round_handle_construction(int m, int k) {
    NamedConstruction nc = m >= 2 && k == 1 ? attaching_belt_reports(m) : NamedConstruction{};
    if (nc.name.empty()) {
        nc.name = "round-handle";
        nc.chart = Chart::handle(m);
    }
    HandleSpace h = make_handle(m, k);

    nc.check_symbolic("d-omega0-zero", ext_d(h.omega0).is_symbolic_zero());
    nc.check_symbolic("liouville-identity",
                      lie_derivative(h.liouville, h.omega0) == h.omega0);
    nc.check_symbolic("cartan-liouville", ext_d(interior(h.liouville, h.omega0)) == h.omega0);

    HandleRegion hr = make_handle_region(h);
    std::vector<double> origin(static_cast<size_t>(h.chart->dim()), 0.0);
    nc.check_grid("origin-inside", handle_membership(hr, origin).where == Membership::Inside);
    std::vector<double> wminus = origin;
    wminus[static_cast<size_t>(h.q_idx(1))] = std::sqrt(2.0);
    auto mb = handle_membership(hr, wminus);
    nc.check_grid("attaching-face", mb.where == Membership::Boundary && mb.face == "W-");

    // region non-emptiness on a coarse grid
    {
        size_t inside = 0;
        int steps = 4;
        std::vector<double> p(static_cast<size_t>(h.chart->dim()), 0.0);
        std::function<void(int)> walk = [&](int d) {
            if (d == h.chart->dim()) {
                if (handle_membership(hr, p).where == Membership::Inside) ++inside;
                return;
            }
            if (h.chart->coord(d).kind == CoordKind::Angle) {
                p[static_cast<size_t>(d)] = 0.0;
                walk(d + 1);
                return;
            }
            for (int s = 0; s <= steps; ++s) {
                p[static_cast<size_t>(d)] = -1.0 + 2.0 * s / steps;
                walk(d + 1);
            }
        };
        walk(0);
        nc.check_grid("region-nonempty", inside > 0, std::to_string(inside) + " interior samples");
    }

    // classify the induced contact forms on the handle-region slices
    for (int sgn : {+1, -1}) {
        Restriction rest;
        DifferentialForm alpha = induced_form(h, h.q_idx(1), SubstConst::exact(sgn), &rest);
        std::vector<std::pair<double, double>> box;
        for (int i = 0; i < rest.subchart->dim(); ++i) {
            if (rest.subchart->coord(i).kind == CoordKind::Angle)
                box.push_back({0.0, 2 * 3.141592653589793});
            else
                box.push_back({-1.1, 1.1});
        }
        Region reg(rest.subchart, std::move(box));
        reg.with_constraint(hr.f_k.substitute(rest.assignment, rest.subchart, rest.index_map) +
                            sx_const(rest.subchart, 1));
        reg.with_constraint(sx_const(rest.subchart, rat_from(hr.c)) -
                            hr.g_k.substitute(rest.assignment, rest.subchart, rest.index_map));
        Classification cls = classify(alpha, reg);
        nc.certificates.push_back(cls.cert);
        nc.check_grid("induced-contact-q1" + std::string(sgn > 0 ? "+" : "-"),
                      cls.cls == ContactClass::Contact,
                      "orientation " + std::to_string(cls.orientation));
    }
    return nc;
}

}  // namespace lutzlab
