#include "lutzlab/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lutzlab {

namespace {
constexpr double kPi = 3.141592653589793238462643;
constexpr double kPoleTol = 1e-12;
}

// ---------------------------------------------------------------------------
// OpaqueTable

OpaqueTable& OpaqueTable::instance() {
    static OpaqueTable table;
    return table;
}

int OpaqueTable::intern(const std::string& name, bool is_constant, bool is_field) {
    for (size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].name == name) {
            if (entries_[i].constant != is_constant || entries_[i].field != is_field)
                throw BadAssignment("opaque symbol " + name + " re-registered with different flags");
            return static_cast<int>(i);
        }
    }
    entries_.push_back({name, is_constant, is_field});
    return static_cast<int>(entries_.size() - 1);
}

const std::string& OpaqueTable::name(int id) const { return entries_.at(static_cast<size_t>(id)).name; }
bool OpaqueTable::is_constant(int id) const { return entries_.at(static_cast<size_t>(id)).constant; }
bool OpaqueTable::is_field(int id) const { return entries_.at(static_cast<size_t>(id)).field; }

// ---------------------------------------------------------------------------
// Atom

bool Atom::base_less(const Atom& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (coord != o.coord) return coord < o.coord;
    if (arg != o.arg) return arg < o.arg;
    if (sym != o.sym) return sym < o.sym;
    return order < o.order;
}

double SubstConst::value() const {
    switch (kind) {
        case Kind::Rational: return to_double(q);
        case Kind::PiMultiple: return to_double(q) * kPi;
        case Kind::SqrtPiMultiple: return std::sqrt(to_double(q) * kPi);
    }
    return 0.0;
}

// ---------------------------------------------------------------------------
// construction / normalization

namespace {

bool atoms_less(const std::vector<Atom>& a, const std::vector<Atom>& b) {
    size_t n = std::min(a.size(), b.size());
    for (size_t i = 0; i < n; ++i) {
        if (!a[i].same_base(b[i])) return a[i].base_less(b[i]);
        if (a[i].exponent != b[i].exponent) return a[i].exponent < b[i].exponent;
    }
    return a.size() < b.size();
}

bool atoms_equal(const std::vector<Atom>& a, const std::vector<Atom>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

// Sort atoms by base, merge equal bases by adding exponents, drop exponent 0.
void tidy_term(Term& t) {
    std::sort(t.atoms.begin(), t.atoms.end(),
              [](const Atom& x, const Atom& y) { return x.base_less(y); });
    std::vector<Atom> merged;
    for (const Atom& a : t.atoms) {
        if (!merged.empty() && merged.back().same_base(a))
            merged.back().exponent += a.exponent;
        else
            merged.push_back(a);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(),
                                [](const Atom& a) { return a.exponent == 0; }),
                 merged.end());
    t.atoms = std::move(merged);
}

void combine_terms(std::vector<Term>& terms) {
    for (Term& t : terms) tidy_term(t);
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return atoms_less(x.atoms, y.atoms); });
    std::vector<Term> out;
    for (Term& t : terms) {
        if (t.coeff == 0) continue;
        if (!out.empty() && atoms_equal(out.back().atoms, t.atoms))
            out.back().coeff += t.coeff;
        else
            out.push_back(std::move(t));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Term& t) { return t.coeff == 0; }),
              out.end());
    terms = std::move(out);
}

// Multiply a term by atom^1..; keeps term tidy.
Term term_times_atom(Term t, Atom a) {
    t.atoms.push_back(a);
    tidy_term(t);
    return t;
}

}  // namespace

void ScalarExpr::validate_atoms() const {
    for (const Term& t : terms_) {
        for (const Atom& a : t.atoms) {
            if (a.exponent == 0) throw IllFormedAtom("zero exponent");
            if (a.kind == AtomKind::Opaque) {
                if (a.coord >= chart_->dim()) throw IllFormedAtom("opaque argument out of range");
                continue;
            }
            if (a.coord < 0 || a.coord >= chart_->dim()) throw IllFormedAtom("coordinate out of range");
            CoordKind k = chart_->coord(a.coord).kind;
            if (a.kind == AtomKind::Coord) {
                if (a.exponent < 0 && k != CoordKind::Radial && k != CoordKind::Linear)
                    throw IllFormedAtom("negative exponent on coordinate " +
                                        chart_->coord(a.coord).name);
            } else {
                if (a.arg == TrigArg::Squared && k != CoordKind::Radial && k != CoordKind::Linear)
                    throw IllFormedAtom("squared trig argument on coordinate " +
                                        chart_->coord(a.coord).name);
            }
        }
    }
}

void ScalarExpr::normalize() {
    combine_terms(terms_);
    // Pythagorean collapse to fixpoint.
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Term> next;
        next.reserve(terms_.size());
        for (Term& t : terms_) {
            // rule 1: sin^e u (e >= 2)  ->  sin^{e-2} u (1 - cos^2 u)
            int idx = -1;
            for (size_t i = 0; i < t.atoms.size(); ++i) {
                if (t.atoms[i].kind == AtomKind::Sin && t.atoms[i].exponent >= 2) {
                    idx = static_cast<int>(i);
                    break;
                }
            }
            if (idx >= 0) {
                Atom s = t.atoms[static_cast<size_t>(idx)];
                Term base = t;
                base.atoms[static_cast<size_t>(idx)].exponent -= 2;
                tidy_term(base);
                Term minus = term_times_atom(base, Atom::cos_of(s.coord, s.arg, 2));
                minus.coeff = -minus.coeff;
                next.push_back(std::move(base));
                next.push_back(std::move(minus));
                changed = true;
                continue;
            }
            // rule 2: cos^e u (e >= 2) with sin^{<0} u present
            //         ->  cos^{e-2} u (1 - sin^2 u)
            for (size_t i = 0; i < t.atoms.size(); ++i) {
                const Atom& c = t.atoms[i];
                if (c.kind != AtomKind::Cos || c.exponent < 2) continue;
                bool neg_sin = false;
                for (const Atom& s : t.atoms)
                    if (s.kind == AtomKind::Sin && s.coord == c.coord && s.arg == c.arg &&
                        s.exponent < 0) {
                        neg_sin = true;
                        break;
                    }
                if (neg_sin) {
                    idx = static_cast<int>(i);
                    break;
                }
            }
            if (idx >= 0) {
                Atom c = t.atoms[static_cast<size_t>(idx)];
                Term base = t;
                base.atoms[static_cast<size_t>(idx)].exponent -= 2;
                tidy_term(base);
                Term minus = term_times_atom(base, Atom::sin_of(c.coord, c.arg, 2));
                minus.coeff = -minus.coeff;
                next.push_back(std::move(base));
                next.push_back(std::move(minus));
                changed = true;
                continue;
            }
            next.push_back(std::move(t));
        }
        terms_ = std::move(next);
        combine_terms(terms_);
    }
}

ScalarExpr ScalarExpr::canonicalize(const ChartPtr& chart, std::vector<Term> raw) {
    ScalarExpr e;
    e.chart_ = chart;
    e.terms_ = std::move(raw);
    e.validate_atoms();
    e.normalize();
    return e;
}

ScalarExpr ScalarExpr::zero(const ChartPtr& chart) { return canonicalize(chart, {}); }

ScalarExpr ScalarExpr::constant(const ChartPtr& chart, Rational c) {
    std::vector<Term> ts;
    if (c != 0) ts.push_back({std::move(c), {}});
    return canonicalize(chart, std::move(ts));
}

ScalarExpr ScalarExpr::atom(const ChartPtr& chart, Atom a, Rational c) {
    return canonicalize(chart, {{std::move(c), {a}}});
}

bool ScalarExpr::is_constant(Rational* out) const {
    if (terms_.empty()) {
        if (out) *out = 0;
        return true;
    }
    if (terms_.size() == 1 && terms_[0].atoms.empty()) {
        if (out) *out = terms_[0].coeff;
        return true;
    }
    return false;
}

bool ScalarExpr::has_opaque() const {
    for (const Term& t : terms_)
        for (const Atom& a : t.atoms)
            if (a.kind == AtomKind::Opaque) return true;
    return false;
}

bool ScalarExpr::references(int coord) const {
    for (const Term& t : terms_)
        for (const Atom& a : t.atoms)
            if (a.coord == coord) return true;
    return false;
}

bool ScalarExpr::has_negative_exponent() const {
    for (const Term& t : terms_)
        for (const Atom& a : t.atoms)
            if (a.exponent < 0) return true;
    return false;
}

// ---------------------------------------------------------------------------
// arithmetic

ScalarExpr ScalarExpr::operator+(const ScalarExpr& o) const {
    require_same_chart(chart_, o.chart_, "ScalarExpr +");
    std::vector<Term> ts = terms_;
    ts.insert(ts.end(), o.terms_.begin(), o.terms_.end());
    return canonicalize(chart_, std::move(ts));
}

ScalarExpr ScalarExpr::operator-(const ScalarExpr& o) const { return *this + (-o); }

ScalarExpr ScalarExpr::operator-() const {
    ScalarExpr e = *this;
    for (Term& t : e.terms_) t.coeff = -t.coeff;
    return e;
}

ScalarExpr ScalarExpr::scaled(const Rational& c) const {
    if (c == 0) return zero(chart_);
    ScalarExpr e = *this;
    for (Term& t : e.terms_) t.coeff *= c;
    return e;
}

ScalarExpr ScalarExpr::operator*(const ScalarExpr& o) const {
    require_same_chart(chart_, o.chart_, "ScalarExpr *");
    std::vector<Term> ts;
    ts.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_) {
        for (const Term& b : o.terms_) {
            Term t;
            t.coeff = a.coeff * b.coeff;
            t.atoms = a.atoms;
            t.atoms.insert(t.atoms.end(), b.atoms.begin(), b.atoms.end());
            ts.push_back(std::move(t));
        }
    }
    return canonicalize(chart_, std::move(ts));
}

ScalarExpr ScalarExpr::pow(int e) const {
    if (e < 0) throw IllFormedAtom("ScalarExpr::pow negative");
    ScalarExpr out = constant(chart_, 1);
    for (int i = 0; i < e; ++i) out = out * *this;
    return out;
}

ScalarExpr ScalarExpr::divided_by_monomial(const ScalarExpr& m) const {
    require_same_chart(chart_, m.chart_, "ScalarExpr /");
    if (m.terms_.size() != 1) throw ZeroVolume("divisor is not a monomial");
    const Term& d = m.terms_[0];
    std::vector<Term> ts = terms_;
    for (Term& t : ts) {
        t.coeff /= d.coeff;
        for (const Atom& a : d.atoms) {
            Atom inv = a;
            inv.exponent = -a.exponent;
            t.atoms.push_back(inv);
        }
    }
    return canonicalize(chart_, std::move(ts));
}

bool ScalarExpr::operator==(const ScalarExpr& o) const {
    if (!chart_ || !o.chart_) return terms_.empty() && o.terms_.empty();
    if (!chart_->same_as(*o.chart_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].coeff != o.terms_[i].coeff) return false;
        if (!atoms_equal(terms_[i].atoms, o.terms_[i].atoms)) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// differentiation

ScalarExpr ScalarExpr::differentiate(int coord) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
        for (size_t i = 0; i < t.atoms.size(); ++i) {
            const Atom& a = t.atoms[i];
            if (a.kind == AtomKind::Opaque) {
                if (OpaqueTable::instance().is_constant(a.sym)) continue;
                if (OpaqueTable::instance().is_field(a.sym))
                    throw UnboundOpaque("cannot differentiate field symbol " +
                                        OpaqueTable::instance().name(a.sym));
                if (a.coord != coord) continue;
            } else if (a.coord != coord) {
                continue;
            }
            // remainder = term without atom i, coefficient kept
            Term rest = t;
            rest.atoms.erase(rest.atoms.begin() + static_cast<long>(i));
            int e = a.exponent;
            switch (a.kind) {
                case AtomKind::Coord: {
                    Term d = rest;
                    d.coeff *= e;
                    if (e != 1) d.atoms.push_back(Atom::coord_pow(coord, e - 1));
                    out.push_back(std::move(d));
                    break;
                }
                case AtomKind::Sin: {
                    // d sin^e(u) = e sin^{e-1}(u) cos(u) du
                    Term d = rest;
                    d.coeff *= e;
                    if (e != 1) d.atoms.push_back(Atom::sin_of(a.coord, a.arg, e - 1));
                    d.atoms.push_back(Atom::cos_of(a.coord, a.arg, 1));
                    if (a.arg == TrigArg::Squared) {
                        d.coeff *= 2;
                        d.atoms.push_back(Atom::coord_pow(coord, 1));
                    }
                    out.push_back(std::move(d));
                    break;
                }
                case AtomKind::Cos: {
                    Term d = rest;
                    d.coeff *= -e;
                    if (e != 1) d.atoms.push_back(Atom::cos_of(a.coord, a.arg, e - 1));
                    d.atoms.push_back(Atom::sin_of(a.coord, a.arg, 1));
                    if (a.arg == TrigArg::Squared) {
                        d.coeff *= 2;
                        d.atoms.push_back(Atom::coord_pow(coord, 1));
                    }
                    out.push_back(std::move(d));
                    break;
                }
                case AtomKind::Opaque: {
                    Term d = rest;
                    d.coeff *= e;
                    if (e != 1) d.atoms.push_back(Atom::opaque(a.sym, a.coord, a.arg, a.order, e - 1));
                    d.atoms.push_back(Atom::opaque(a.sym, a.coord, a.arg, a.order + 1, 1));
                    if (a.arg == TrigArg::Squared) {
                        d.coeff *= 2;
                        d.atoms.push_back(Atom::coord_pow(coord, 1));
                    }
                    out.push_back(std::move(d));
                    break;
                }
            }
        }
    }
    return canonicalize(chart_, std::move(out));
}

// ---------------------------------------------------------------------------
// evaluation

double ScalarExpr::evaluate(const std::vector<double>& point, const OpaqueBindings* bindings) const {
    double total = 0.0;
    for (const Term& t : terms_) {
        double v = to_double(t.coeff);
        for (const Atom& a : t.atoms) {
            double base;
            if (a.kind == AtomKind::Opaque) {
                const auto& tab = OpaqueTable::instance();
                if (tab.is_field(a.sym)) {
                    if (!bindings || !bindings->field.count(a.sym))
                        throw UnboundOpaque(tab.name(a.sym));
                    base = bindings->field.at(a.sym)(point);
                } else {
                    if (!bindings || !bindings->unary.count(a.sym) ||
                        static_cast<size_t>(a.order) >= bindings->unary.at(a.sym).size())
                        throw UnboundOpaque(tab.name(a.sym));
                    double x = point.at(static_cast<size_t>(a.coord));
                    if (a.arg == TrigArg::Squared) x *= x;
                    base = bindings->unary.at(a.sym)[static_cast<size_t>(a.order)](x);
                }
            } else {
                double x = point.at(static_cast<size_t>(a.coord));
                if (a.arg == TrigArg::Squared) x *= x;
                switch (a.kind) {
                    case AtomKind::Coord: base = x; break;
                    case AtomKind::Sin: base = std::sin(x); break;
                    case AtomKind::Cos: base = std::cos(x); break;
                    default: base = 0.0; break;
                }
            }
            if (a.exponent < 0 && std::abs(base) < kPoleTol)
                throw DomainPole("atom vanishes at evaluation point");
            v *= std::pow(base, a.exponent);
        }
        total += v;
    }
    return total;
}

// ---------------------------------------------------------------------------
// substitution

namespace {

// Exact sin/cos of q*pi; throws if not a half-integer multiple.
Rational sin_of_pi_multiple(const Rational& q) {
    Rational twice = q * 2;
    if (denominator(twice) != 1) throw BadAssignment("sin of irrational multiple of pi/2");
    long long k = twice.convert_to<long long>();
    long long mod = ((k % 4) + 4) % 4;  // sin(k*pi/2) cycle: 0,1,0,-1
    switch (mod) {
        case 0: return 0;
        case 1: return 1;
        case 2: return 0;
        default: return -1;
    }
}

Rational cos_of_pi_multiple(const Rational& q) { return sin_of_pi_multiple(q + Rational(1, 2)); }

}  // namespace

ScalarExpr ScalarExpr::substitute(const std::map<int, SubstConst>& assignment, const ChartPtr& target,
                                  const std::vector<int>& index_map) const {
    std::vector<Term> out;
    for (const Term& t : terms_) {
        Term nt;
        nt.coeff = t.coeff;
        bool dead = false;
        for (const Atom& a : t.atoms) {
            auto it = a.coord >= 0 ? assignment.find(a.coord) : assignment.end();
            if (it == assignment.end()) {
                Atom na = a;
                if (a.coord >= 0) {
                    int ni = index_map.at(static_cast<size_t>(a.coord));
                    if (ni < 0) throw BadAssignment("unassigned coordinate dropped in substitution");
                    na.coord = static_cast<int16_t>(ni);
                }
                nt.atoms.push_back(na);
                continue;
            }
            const SubstConst& c = it->second;
            if (a.kind == AtomKind::Opaque)
                throw BadAssignment("cannot substitute a constant into an opaque argument");
            Rational factor;
            switch (a.kind) {
                case AtomKind::Coord: {
                    if (c.kind == SubstConst::Kind::Rational) {
                        if (c.q == 0 && a.exponent < 0) throw DomainPole("substituted pole");
                        factor = c.q == 0 && a.exponent > 0 ? Rational(0) : rat_pow(c.q, a.exponent);
                    } else if (c.kind == SubstConst::Kind::SqrtPiMultiple && c.q == 0) {
                        factor = 0;
                        if (a.exponent < 0) throw DomainPole("substituted pole");
                    } else {
                        throw BadAssignment("irrational coordinate power in substitution");
                    }
                    break;
                }
                case AtomKind::Sin:
                case AtomKind::Cos: {
                    Rational pi_mult;  // argument as multiple of pi
                    if (a.arg == TrigArg::Squared) {
                        if (c.kind == SubstConst::Kind::SqrtPiMultiple)
                            pi_mult = c.q;
                        else if (c.kind == SubstConst::Kind::Rational && c.q == 0)
                            pi_mult = 0;
                        else
                            throw BadAssignment("irrational trig argument in substitution");
                    } else {
                        if (c.kind == SubstConst::Kind::PiMultiple)
                            pi_mult = c.q;
                        else if (c.kind == SubstConst::Kind::Rational && c.q == 0)
                            pi_mult = 0;
                        else
                            throw BadAssignment("irrational trig argument in substitution");
                    }
                    Rational v = a.kind == AtomKind::Sin ? sin_of_pi_multiple(pi_mult)
                                                         : cos_of_pi_multiple(pi_mult);
                    if (v == 0 && a.exponent < 0) throw DomainPole("substituted pole");
                    factor = v == 0 ? Rational(0) : rat_pow(v, a.exponent);
                    break;
                }
                default: factor = 0; break;
            }
            if (factor == 0) {
                dead = true;
                break;
            }
            nt.coeff *= factor;
        }
        if (!dead) out.push_back(std::move(nt));
    }
    return canonicalize(target, std::move(out));
}

ScalarExpr ScalarExpr::substitute_opaque(int sym, const std::vector<ScalarExpr>& per_order) const {
    ScalarExpr total = zero(chart_);
    for (const Term& t : terms_) {
        ScalarExpr piece = constant(chart_, t.coeff);
        for (const Atom& a : t.atoms) {
            if (a.kind == AtomKind::Opaque && a.sym == sym) {
                if (static_cast<size_t>(a.order) >= per_order.size())
                    throw UnboundOpaque("no replacement for derivative order");
                if (a.exponent < 0)
                    throw BadAssignment("cannot substitute into negative opaque power");
                piece = piece * per_order[static_cast<size_t>(a.order)].pow(a.exponent);
            } else {
                piece = piece * ScalarExpr::atom(chart_, a);
            }
        }
        total = total + piece;
    }
    return total;
}

// ---------------------------------------------------------------------------
// zero testing

ScalarExpr::ZeroResult ScalarExpr::is_zero(uint64_t seed, const OpaqueBindings* bindings) const {
    if (terms_.empty()) return {ZeroKind::SymbolicZero, {}, 0.0};
    if (has_opaque() && !bindings)
        throw UnboundOpaque("is_zero sampling requires bindings for opaque symbols");
    std::mt19937_64 rng(seed);
    int found = 0;
    int guard = 0;
    while (found < 64 && guard < 1024) {
        ++guard;
        std::vector<double> p = chart_->sample_point(rng);
        double v;
        try {
            v = evaluate(p, bindings);
        } catch (const DomainPole&) {
            continue;  // resample
        }
        ++found;
        if (std::abs(v) > 1e-9) return {ZeroKind::NonZero, p, v};
    }
    return {ZeroKind::ProbablyZero, {}, 0.0};
}

// ---------------------------------------------------------------------------
// compiled numeric form

CompiledExpr::CompiledExpr(const ScalarExpr& e) {
    if (e.has_opaque()) return;
    for (const Term& t : e.terms()) {
        CTerm ct;
        ct.coeff = to_double(t.coeff);
        for (const Atom& a : t.atoms)
            ct.ops.push_back({a.kind, a.arg, a.coord, a.exponent});
        terms_.push_back(std::move(ct));
    }
    ok_ = true;
}

double CompiledExpr::evaluate(const std::vector<double>& point) const {
    double total = 0.0;
    for (const CTerm& t : terms_) {
        double v = t.coeff;
        for (const Op& op : t.ops) {
            double x = point[static_cast<size_t>(op.coord)];
            if (op.arg == TrigArg::Squared) x *= x;
            double base;
            switch (op.kind) {
                case AtomKind::Coord: base = x; break;
                case AtomKind::Sin: base = std::sin(x); break;
                case AtomKind::Cos: base = std::cos(x); break;
                default: base = 0.0; break;
            }
            if (op.exponent < 0 && std::abs(base) < kPoleTol)
                throw DomainPole("atom vanishes at evaluation point");
            switch (op.exponent) {
                case 1: v *= base; break;
                case 2: v *= base * base; break;
                case -1: v /= base; break;
                case -2: v /= base * base; break;
                default: v *= std::pow(base, op.exponent); break;
            }
        }
        total += v;
    }
    return total;
}

// ---------------------------------------------------------------------------
// printing

std::string ScalarExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool wrote = false;
        if (c != 1 || t.atoms.empty()) {
            os << rat_str(c);
            wrote = true;
        }
        for (const Atom& a : t.atoms) {
            if (wrote) os << "*";
            wrote = true;
            std::string argname =
                a.coord >= 0 ? chart_->coord(a.coord).name : std::string();
            if (a.kind != AtomKind::Coord && a.arg == TrigArg::Squared) argname += "^2";
            switch (a.kind) {
                case AtomKind::Coord: os << argname; break;
                case AtomKind::Sin: os << "sin(" << argname << ")"; break;
                case AtomKind::Cos: os << "cos(" << argname << ")"; break;
                case AtomKind::Opaque: {
                    os << OpaqueTable::instance().name(a.sym);
                    for (int k = 0; k < a.order; ++k) os << "'";
                    if (a.coord >= 0) os << "(" << argname << ")";
                    break;
                }
            }
            if (a.exponent != 1) os << "^" << a.exponent;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// builders

ScalarExpr sx_coord(const ChartPtr& c, int i, int e) {
    return ScalarExpr::atom(c, Atom::coord_pow(i, e));
}
ScalarExpr sx_sin(const ChartPtr& c, int i, TrigArg arg, int e) {
    return ScalarExpr::atom(c, Atom::sin_of(i, arg, e));
}
ScalarExpr sx_cos(const ChartPtr& c, int i, TrigArg arg, int e) {
    return ScalarExpr::atom(c, Atom::cos_of(i, arg, e));
}
ScalarExpr sx_const(const ChartPtr& c, Rational q) { return ScalarExpr::constant(c, std::move(q)); }
ScalarExpr sx_opaque(const ChartPtr& c, int sym, int coord, TrigArg arg, int order) {
    return ScalarExpr::atom(c, Atom::opaque(sym, coord, arg, order));
}

}  // namespace lutzlab
