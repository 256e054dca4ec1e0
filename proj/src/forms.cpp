#include "lutzlab/forms.hpp"

#include <algorithm>
#include <sstream>

namespace lutzlab {

// ---------------------------------------------------------------------------
// DifferentialForm

DifferentialForm::DifferentialForm(ChartPtr chart, int degree)
    : chart_(std::move(chart)), degree_(degree) {
    if (degree_ < 0 || degree_ > chart_->dim()) throw NotTopDegree("degree out of range");
}

DifferentialForm DifferentialForm::d_coord(const ChartPtr& chart, int i, const ScalarExpr& coeff) {
    DifferentialForm f(chart, 1);
    f.set_component({i}, coeff);
    return f;
}

ScalarExpr DifferentialForm::component(const IndexTuple& key) const {
    auto it = comps_.find(key);
    return it == comps_.end() ? ScalarExpr::zero(chart_) : it->second;
}

void DifferentialForm::set_component(IndexTuple key, ScalarExpr value) {
    if (static_cast<int>(key.size()) != degree_) throw NotTopDegree("component key length");
    for (size_t i = 0; i + 1 < key.size(); ++i)
        if (key[i] >= key[i + 1]) throw NotTopDegree("component key not increasing");
    if (!key.empty() && (key.front() < 0 || key.back() >= chart_->dim()))
        throw NotTopDegree("component key out of range");
    if (value.is_symbolic_zero())
        comps_.erase(key);
    else
        comps_[std::move(key)] = std::move(value);
}

void DifferentialForm::add_component(const IndexTuple& key, const ScalarExpr& value) {
    set_component(key, component(key) + value);
}

DifferentialForm DifferentialForm::operator+(const DifferentialForm& o) const {
    require_same_chart(chart_, o.chart_, "form +");
    if (degree_ != o.degree_) throw NotTopDegree("degree mismatch in +");
    DifferentialForm out = *this;
    for (const auto& [k, v] : o.comps_) out.add_component(k, v);
    return out;
}

DifferentialForm DifferentialForm::operator-(const DifferentialForm& o) const {
    return *this + (-o);
}

DifferentialForm DifferentialForm::operator-() const {
    DifferentialForm out = *this;
    for (auto& [k, v] : out.comps_) v = -v;
    return out;
}

DifferentialForm DifferentialForm::scaled(const Rational& c) const {
    DifferentialForm out(chart_, degree_);
    for (const auto& [k, v] : comps_) out.set_component(k, v.scaled(c));
    return out;
}

DifferentialForm DifferentialForm::scaled_expr(const ScalarExpr& f) const {
    DifferentialForm out(chart_, degree_);
    for (const auto& [k, v] : comps_) out.set_component(k, v * f);
    return out;
}

bool DifferentialForm::operator==(const DifferentialForm& o) const {
    if (!chart_ || !o.chart_) return comps_.empty() && o.comps_.empty();
    if (!chart_->same_as(*o.chart_) || degree_ != o.degree_) return false;
    if (comps_.size() != o.comps_.size()) return false;
    auto it = comps_.begin();
    auto jt = o.comps_.begin();
    for (; it != comps_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

std::string DifferentialForm::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : comps_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ")";
        for (int i : k) os << " d" << chart_->coord(i).name;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// VectorField

ScalarExpr VectorField::component(int i) const {
    auto it = comps_.find(i);
    return it == comps_.end() ? ScalarExpr::zero(chart_) : it->second;
}

void VectorField::set_component(int i, ScalarExpr value) {
    if (i < 0 || i >= chart_->dim()) throw BadIndex("vector component out of range");
    if (value.is_symbolic_zero())
        comps_.erase(i);
    else
        comps_[i] = std::move(value);
}

VectorField VectorField::operator+(const VectorField& o) const {
    require_same_chart(chart_, o.chart_, "vector +");
    VectorField out = *this;
    for (const auto& [i, v] : o.comps_) out.set_component(i, out.component(i) + v);
    return out;
}

VectorField VectorField::scaled(const Rational& c) const {
    VectorField out(chart_);
    for (const auto& [i, v] : comps_) out.set_component(i, v.scaled(c));
    return out;
}

VectorField VectorField::scaled_expr(const ScalarExpr& f) const {
    VectorField out(chart_);
    for (const auto& [i, v] : comps_) out.set_component(i, v * f);
    return out;
}

bool VectorField::operator==(const VectorField& o) const {
    if (!chart_ || !o.chart_) return comps_.empty() && o.comps_.empty();
    if (!chart_->same_as(*o.chart_)) return false;
    if (comps_.size() != o.comps_.size()) return false;
    auto it = comps_.begin();
    auto jt = o.comps_.begin();
    for (; it != comps_.end(); ++it, ++jt)
        if (it->first != jt->first || !(it->second == jt->second)) return false;
    return true;
}

std::string VectorField::str() const {
    if (comps_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, v] : comps_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << v.str() << ") d/d" << chart_->coord(i).name;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// DiagonalMetric

DiagonalMetric::DiagonalMetric(ChartPtr chart, std::vector<ScalarExpr> scale_factors)
    : chart_(std::move(chart)), h_(std::move(scale_factors)) {
    if (static_cast<int>(h_.size()) != chart_->dim())
        throw BadIndex("metric entry count != dim");
    for (const auto& h : h_)
        if (!h.is_monomial()) throw PoleOnRegion("metric scale factor must be a monomial");
}

DiagonalMetric DiagonalMetric::cylindrical(const ChartPtr& chart) {
    std::vector<ScalarExpr> h;
    for (int i = 0; i < chart->dim(); ++i) {
        if (chart->coord(i).kind == CoordKind::Angle && i > 0 &&
            chart->coord(i - 1).kind == CoordKind::Radial)
            h.push_back(sx_coord(chart, i - 1));
        else
            h.push_back(sx_const(chart, 1));
    }
    return DiagonalMetric(chart, std::move(h));
}

DiagonalMetric DiagonalMetric::squared_radial(const ChartPtr& chart) {
    std::vector<ScalarExpr> h;
    for (int i = 0; i < chart->dim(); ++i) {
        if (chart->coord(i).kind == CoordKind::Radial)
            h.push_back(sx_coord(chart, i));
        else
            h.push_back(sx_const(chart, 1));
    }
    return DiagonalMetric(chart, std::move(h));
}

// ---------------------------------------------------------------------------
// wedge

int merge_sign(const IndexTuple& a, const IndexTuple& b, IndexTuple& merged) {
    merged.clear();
    merged.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    int sign = 1;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return 0;
        if (a[i] < b[j]) {
            merged.push_back(a[i++]);
        } else {
            // b[j] jumps over the remaining entries of a
            if ((a.size() - i) % 2 == 1) sign = -sign;
            merged.push_back(b[j++]);
        }
    }
    while (i < a.size()) merged.push_back(a[i++]);
    while (j < b.size()) merged.push_back(b[j++]);
    return sign;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
    require_same_chart(a.chart(), b.chart(), "wedge");
    int deg = a.degree() + b.degree();
    if (deg > a.chart()->dim()) return DifferentialForm::zero(a.chart(), a.chart()->dim());
    DifferentialForm out(a.chart(), deg);
    IndexTuple merged;
    for (const auto& [I, ca] : a.components()) {
        for (const auto& [J, cb] : b.components()) {
            int sign = merge_sign(I, J, merged);
            if (sign == 0) continue;
            ScalarExpr v = ca * cb;
            if (sign < 0) v = -v;
            out.add_component(merged, v);
        }
    }
    return out;
}

DifferentialForm wedge_pow(const DifferentialForm& a, int n) {
    if (n == 0) {
        DifferentialForm one(a.chart(), 0);
        one.set_component({}, sx_const(a.chart(), 1));
        return one;
    }
    DifferentialForm out = a;
    for (int i = 1; i < n; ++i) out = wedge(out, a);
    return out;
}

// ---------------------------------------------------------------------------
// exterior derivative

DifferentialForm ext_d(const DifferentialForm& a) {
    if (a.degree() >= a.chart()->dim()) return DifferentialForm::zero(a.chart(), a.chart()->dim());
    DifferentialForm out(a.chart(), a.degree() + 1);
    IndexTuple merged;
    for (const auto& [I, c] : a.components()) {
        for (int i = 0; i < a.chart()->dim(); ++i) {
            ScalarExpr dc = c.differentiate(i);
            if (dc.is_symbolic_zero()) continue;
            IndexTuple di{i};
            int sign = merge_sign(di, I, merged);
            if (sign == 0) continue;
            if (sign < 0) dc = -dc;
            out.add_component(merged, dc);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// interior product

DifferentialForm interior(const VectorField& x, const DifferentialForm& a) {
    require_same_chart(x.chart(), a.chart(), "interior");
    if (a.degree() == 0) throw DegreeZero("interior product of a 0-form");
    DifferentialForm out(a.chart(), a.degree() - 1);
    for (const auto& [I, c] : a.components()) {
        for (size_t pos = 0; pos < I.size(); ++pos) {
            ScalarExpr xi = x.component(I[pos]);
            if (xi.is_symbolic_zero()) continue;
            ScalarExpr v = xi * c;
            if (pos % 2 == 1) v = -v;
            IndexTuple key;
            key.reserve(I.size() - 1);
            for (size_t j = 0; j < I.size(); ++j)
                if (j != pos) key.push_back(I[j]);
            out.add_component(key, v);
        }
    }
    return out;
}

DifferentialForm lie_derivative(const VectorField& x, const DifferentialForm& a) {
    require_same_chart(x.chart(), a.chart(), "lie_derivative");
    if (a.degree() == 0) {
        // L_X f = X(f)
        DifferentialForm out(a.chart(), 0);
        ScalarExpr f = a.component({});
        ScalarExpr v = ScalarExpr::zero(a.chart());
        for (const auto& [i, xi] : x.components()) v = v + xi * f.differentiate(i);
        out.set_component({}, v);
        return out;
    }
    DifferentialForm part1 = ext_d(interior(x, a));
    if (a.degree() < a.chart()->dim()) part1 = part1 + interior(x, ext_d(a));
    return part1;
}

ScalarExpr pairing(const DifferentialForm& alpha, const VectorField& x) {
    if (alpha.degree() != 1) throw NotTopDegree("pairing needs a 1-form");
    DifferentialForm c = interior(x, alpha);
    return c.component({});
}

// ---------------------------------------------------------------------------
// restriction

Restriction make_restriction(const ChartPtr& chart, const std::map<int, SubstConst>& assignment) {
    Restriction r;
    r.assignment = assignment;
    std::vector<Coordinate> coords;
    r.index_map.assign(static_cast<size_t>(chart->dim()), -1);
    for (int i = 0; i < chart->dim(); ++i) {
        auto it = assignment.find(i);
        if (it != assignment.end()) {
            const Coordinate& c = chart->coord(i);
            double v = it->second.value();
            if (c.kind == CoordKind::Radial && v < -1e-12)
                throw BadAssignment("negative radial constant for " + c.name);
            if (c.kind == CoordKind::BoundedLinear && (v < c.lo - 1e-9 || v > c.hi + 1e-9))
                throw BadAssignment("constant out of bounds for " + c.name);
            continue;
        }
        r.index_map[static_cast<size_t>(i)] = static_cast<int>(coords.size());
        coords.push_back(chart->coord(i));
    }
    if (assignment.empty()) throw BadAssignment("empty restriction assignment");
    for (const auto& [i, c] : assignment)
        if (i < 0 || i >= chart->dim()) throw BadAssignment("assigned coordinate out of range");
    r.subchart = Chart::make(std::move(coords));
    return r;
}

DifferentialForm restrict_form(const DifferentialForm& a, const Restriction& r) {
    DifferentialForm out(r.subchart, a.degree());
    for (const auto& [I, c] : a.components()) {
        IndexTuple key;
        key.reserve(I.size());
        bool drop = false;
        for (int i : I) {
            int ni = r.index_map[static_cast<size_t>(i)];
            if (ni < 0) {
                drop = true;  // differential of an assigned coordinate
                break;
            }
            key.push_back(ni);
        }
        if (drop) continue;
        out.add_component(key, c.substitute(r.assignment, r.subchart, r.index_map));
    }
    return out;
}

DifferentialForm restrict_form(const DifferentialForm& a,
                               const std::map<int, SubstConst>& assignment) {
    return restrict_form(a, make_restriction(a.chart(), assignment));
}

// ---------------------------------------------------------------------------
// hodge star

DifferentialForm hodge_star(const DifferentialForm& a, const DiagonalMetric& g) {
    require_same_chart(a.chart(), g.chart(), "hodge_star");
    int dim = a.chart()->dim();
    DifferentialForm out(a.chart(), dim - a.degree());
    for (const auto& [I, c] : a.components()) {
        IndexTuple comp;
        comp.reserve(static_cast<size_t>(dim) - I.size());
        size_t pos = 0;
        for (int i = 0; i < dim; ++i) {
            if (pos < I.size() && I[pos] == i) {
                ++pos;
                continue;
            }
            comp.push_back(i);
        }
        // sign of the permutation (I, I^c) relative to (0..dim-1)
        IndexTuple full = I;
        full.insert(full.end(), comp.begin(), comp.end());
        int sign = 1;
        for (size_t i = 0; i < full.size(); ++i)
            for (size_t j = i + 1; j < full.size(); ++j)
                if (full[i] > full[j]) sign = -sign;
        ScalarExpr v = c;
        for (int i : comp) v = v * g.scale(i);
        for (int i : I) v = v.divided_by_monomial(g.scale(i));
        if (sign < 0) v = -v;
        out.add_component(comp, v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// volumes, top ratio

DifferentialForm coordinate_volume(const ChartPtr& chart) {
    DifferentialForm v(chart, chart->dim());
    IndexTuple all;
    for (int i = 0; i < chart->dim(); ++i) all.push_back(i);
    v.set_component(all, sx_const(chart, 1));
    return v;
}

DifferentialForm standard_volume(const ChartPtr& chart) {
    ScalarExpr c = sx_const(chart, 1);
    for (int i = 0; i < chart->dim(); ++i)
        if (chart->coord(i).kind == CoordKind::Radial) c = c * sx_coord(chart, i);
    DifferentialForm v = coordinate_volume(chart);
    return v.scaled_expr(c);
}

ScalarExpr top_ratio(const DifferentialForm& a, const DifferentialForm& vol) {
    require_same_chart(a.chart(), vol.chart(), "top_ratio");
    int dim = a.chart()->dim();
    if (a.degree() != dim || vol.degree() != dim) throw NotTopDegree("top_ratio needs top degree");
    if (vol.components().size() != 1) throw ZeroVolume("volume must have one component");
    const auto& [key, vc] = *vol.components().begin();
    (void)key;
    if (a.is_symbolic_zero()) return ScalarExpr::zero(a.chart());
    return a.components().begin()->second.divided_by_monomial(vc);
}


}  // namespace lutzlab
