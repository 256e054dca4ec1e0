// forms.hpp -- sparse differential forms, vector fields, diagonal metrics
#pragma once

#include "lutzlab/scalar.hpp"

#include <map>
#include <vector>

namespace lutzlab {

using IndexTuple = std::vector<int>;  // strictly increasing coordinate indices

class VectorField;

class DifferentialForm {
public:
    DifferentialForm() = default;
    DifferentialForm(ChartPtr chart, int degree);

    static DifferentialForm zero(const ChartPtr& chart, int degree) {
        return DifferentialForm(chart, degree);
    }
    // 1-form c * dx_i
    static DifferentialForm d_coord(const ChartPtr& chart, int i,
                                    const ScalarExpr& coeff);

    const ChartPtr& chart() const { return chart_; }
    int degree() const { return degree_; }
    const std::map<IndexTuple, ScalarExpr>& components() const { return comps_; }
    bool is_symbolic_zero() const { return comps_.empty(); }
    ScalarExpr component(const IndexTuple& key) const;  // zero expr if absent

    void set_component(IndexTuple key, ScalarExpr value);  // key must be increasing
    void add_component(const IndexTuple& key, const ScalarExpr& value);

    DifferentialForm operator+(const DifferentialForm& o) const;
    DifferentialForm operator-(const DifferentialForm& o) const;
    DifferentialForm operator-() const;
    DifferentialForm scaled(const Rational& c) const;
    DifferentialForm scaled_expr(const ScalarExpr& f) const;
    bool operator==(const DifferentialForm& o) const;

    std::string str() const;

private:
    ChartPtr chart_;
    int degree_ = 0;
    std::map<IndexTuple, ScalarExpr> comps_;
};

class VectorField {
public:
    VectorField() = default;
    explicit VectorField(ChartPtr chart) : chart_(std::move(chart)) {}

    const ChartPtr& chart() const { return chart_; }
    const std::map<int, ScalarExpr>& components() const { return comps_; }
    ScalarExpr component(int i) const;
    void set_component(int i, ScalarExpr value);

    VectorField operator+(const VectorField& o) const;
    VectorField scaled(const Rational& c) const;
    VectorField scaled_expr(const ScalarExpr& f) const;
    bool operator==(const VectorField& o) const;

    std::string str() const;

private:
    ChartPtr chart_;
    std::map<int, ScalarExpr> comps_;
};

// Diagonal metric given by positive scale factors h_i, so g_ii = h_i^2.
// Each h_i must be a monomial so the Hodge star stays inside the algebra.
class DiagonalMetric {
public:
    DiagonalMetric(ChartPtr chart, std::vector<ScalarExpr> scale_factors);

    const ChartPtr& chart() const { return chart_; }
    const ScalarExpr& scale(int i) const { return h_.at(static_cast<size_t>(i)); }
    ScalarExpr diagonal(int i) const { return scale(i) * scale(i); }  // g_ii

    // g = dphi^2 + sum(dr_i^2 + r_i^2 dth_i^2) on a cylinder-like chart:
    // h = r_i on Angle coordinates immediately following their radial partner.
    static DiagonalMetric cylindrical(const ChartPtr& chart);
    // flat metric of coordinates (phi, r_i^2/2, th_i): h = r_i on Radial
    // coordinates, 1 elsewhere; this is the star behind tau in the twist
    // computations.
    static DiagonalMetric squared_radial(const ChartPtr& chart);

private:
    ChartPtr chart_;
    std::vector<ScalarExpr> h_;
};

// --- operations --------------------------------------------------------------

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);
DifferentialForm wedge_pow(const DifferentialForm& a, int n);
DifferentialForm ext_d(const DifferentialForm& a);
DifferentialForm interior(const VectorField& x, const DifferentialForm& a);
DifferentialForm lie_derivative(const VectorField& x, const DifferentialForm& a);
DifferentialForm hodge_star(const DifferentialForm& a, const DiagonalMetric& g);

// Pairing alpha(X) for a 1-form.
ScalarExpr pairing(const DifferentialForm& alpha, const VectorField& x);

struct Restriction {
    ChartPtr subchart;
    std::vector<int> index_map;  // old -> new (-1 dropped)
    std::map<int, SubstConst> assignment;
};
// Build the sub-chart obtained by fixing the assigned coordinates.
Restriction make_restriction(const ChartPtr& chart, const std::map<int, SubstConst>& assignment);
DifferentialForm restrict_form(const DifferentialForm& a, const Restriction& r);
DifferentialForm restrict_form(const DifferentialForm& a,
                               const std::map<int, SubstConst>& assignment);

// The unique f with a = f * vol (both top degree, vol a single monomial comp).
ScalarExpr top_ratio(const DifferentialForm& a, const DifferentialForm& vol);

// Chart-order volume with the product of radial coordinates as coefficient
// (the Riemannian volume of both metric factories above).
DifferentialForm standard_volume(const ChartPtr& chart);
// Plain coefficient-1 chart-order volume.
DifferentialForm coordinate_volume(const ChartPtr& chart);

int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& merged);  // 0 if clash

}  // namespace lutzlab
