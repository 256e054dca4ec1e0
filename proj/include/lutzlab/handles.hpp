// handles.hpp -- the symplectic round handle of index 1: omega_0, Liouville
// fields, cutoff regions, induced contact forms and their foliations
#pragma once

#include "lutzlab/certify.hpp"
#include "lutzlab/constructions.hpp"

namespace lutzlab {

// chart layout from Chart::handle(m): p_i at 2(i-1), q_i at 2i-1, then z, phi
struct HandleSpace {
    int m = 0;  // number of symplectic pairs (half-dimension minus 1)
    int k = 0;  // handle index
    ChartPtr chart;
    DifferentialForm omega0;
    VectorField liouville;

    int p_idx(int i) const { return 2 * (i - 1); }
    int q_idx(int i) const { return 2 * i - 1; }
    int z_idx() const { return 2 * m; }
    int phi_idx() const { return 2 * m + 1; }
};

struct HandleRegion {
    int k = 0;
    double A = 2.0, B = 1.0, c = 1.0;
    ScalarExpr f_k;  // cutoff  f_k >= -1
    ScalarExpr g_k;  // cutoff  g_k <= c
};

enum class Membership { Inside, Outside, Boundary };
struct MembershipResult {
    Membership where = Membership::Outside;
    std::string face;  // "W-" (f_k = -1) or "Vc" (g_k = c) when on the boundary
};

// OP make_handle
HandleSpace make_handle(int m, int k);
HandleRegion make_handle_region(const HandleSpace& h, double A = 2.0, double B = 1.0,
                                double c = 1.0);

// OP induced_form: restrict(i_{X_k} omega_0, {coord = value})
DifferentialForm induced_form(const HandleSpace& h, int coord, const SubstConst& value,
                              Restriction* out_rest = nullptr);

// OP handle_membership
MembershipResult handle_membership(const HandleRegion& hr, const std::vector<double>& point);

// OP attaching_belt_reports: chart-by-chart characteristic foliations and
// dividing sets, compared against the printed fields.
NamedConstruction attaching_belt_reports(int m);

// full construction wrapper for the CLI
NamedConstruction round_handle_construction(int m, int k);

}  // namespace lutzlab
