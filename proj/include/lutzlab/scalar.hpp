// scalar.hpp -- canonical trig-polynomial algebra over exact rationals.
//
// A ScalarExpr is a finite sum of terms c * prod(atoms), where an atom is a
// power of a coordinate, of sin/cos of a coordinate (or of a squared radial
// coordinate), or of a registered opaque function symbol.  The one trig
// identity the engine normalizes is the Pythagorean collapse, applied as
//   sin^2 u -> 1 - cos^2 u                        (whenever the sin power is >= 2)
//   cos^2 u -> 1 - sin^2 u   if the same term carries a negative sin power of u
// to a fixpoint.  See docs/scalar-grammar.md for the serialized form.
#pragma once

#include "lutzlab/chart.hpp"
#include "lutzlab/errors.hpp"
#include "lutzlab/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lutzlab {

enum class AtomKind : uint8_t { Coord, Sin, Cos, Opaque };
enum class TrigArg : uint8_t { Plain, Squared };

// Opaque function symbols: named profile functions that enter expressions
// abstractly.  A symbol is either a "field" (an unspecified function of
// position; differentiating it is an error) or a unary function of a single
// coordinate whose spatial derivative bumps the derivative order.  Symbols
// registered as constants differentiate to zero.
class OpaqueTable {
public:
    static OpaqueTable& instance();
    int intern(const std::string& name, bool is_constant, bool is_field);
    const std::string& name(int id) const;
    bool is_constant(int id) const;
    bool is_field(int id) const;

private:
    struct Entry {
        std::string name;
        bool constant = false;
        bool field = false;
    };
    std::vector<Entry> entries_;
};

struct Atom {
    AtomKind kind = AtomKind::Coord;
    TrigArg arg = TrigArg::Plain;  // Sin/Cos/Opaque argument shape
    int16_t coord = -1;            // argument coordinate; -1 for field opaques
    int16_t sym = -1;              // opaque symbol id
    int16_t order = 0;             // opaque derivative order
    int32_t exponent = 1;

    static Atom coord_pow(int i, int e) {
        Atom a;
        a.kind = AtomKind::Coord;
        a.coord = static_cast<int16_t>(i);
        a.exponent = e;
        return a;
    }
    static Atom sin_of(int i, TrigArg arg = TrigArg::Plain, int e = 1) {
        Atom a;
        a.kind = AtomKind::Sin;
        a.arg = arg;
        a.coord = static_cast<int16_t>(i);
        a.exponent = e;
        return a;
    }
    static Atom cos_of(int i, TrigArg arg = TrigArg::Plain, int e = 1) {
        Atom a;
        a.kind = AtomKind::Cos;
        a.arg = arg;
        a.coord = static_cast<int16_t>(i);
        a.exponent = e;
        return a;
    }
    static Atom opaque(int sym, int coord, TrigArg arg = TrigArg::Plain, int order = 0, int e = 1) {
        Atom a;
        a.kind = AtomKind::Opaque;
        a.arg = arg;
        a.coord = static_cast<int16_t>(coord);
        a.sym = static_cast<int16_t>(sym);
        a.order = static_cast<int16_t>(order);
        a.exponent = e;
        return a;
    }

    bool same_base(const Atom& o) const {
        return kind == o.kind && arg == o.arg && coord == o.coord && sym == o.sym &&
               order == o.order;
    }
    // Base-only ordering (exponent excluded); total within a term.
    bool base_less(const Atom& o) const;
    bool operator==(const Atom& o) const { return same_base(o) && exponent == o.exponent; }
};

struct Term {
    Rational coeff;
    std::vector<Atom> atoms;  // sorted by base, unique bases, exponents merged
};

// Exact substitution constants: a rational value, a rational multiple of pi,
// or the square root of a rational multiple of pi (radial constants such as
// sqrt(pi/2), whose squares are exact multiples of pi).
struct SubstConst {
    enum class Kind { Rational, PiMultiple, SqrtPiMultiple } kind = Kind::Rational;
    Rational q;  // value, value/pi, or value^2/pi respectively

    static SubstConst exact(Rational v) { return {Kind::Rational, std::move(v)}; }
    static SubstConst pi_multiple(Rational v) { return {Kind::PiMultiple, std::move(v)}; }
    static SubstConst sqrt_pi(Rational v) { return {Kind::SqrtPiMultiple, std::move(v)}; }
    double value() const;
};

// Numeric bindings for opaque symbols: value and derivatives of the named
// profile as functions of the scalar argument (the coordinate, or its square
// for TrigArg::Squared atoms; field opaques receive the full point).
struct OpaqueBindings {
    std::map<int, std::vector<std::function<double(double)>>> unary;  // sym -> per-order fn
    std::map<int, std::function<double(const std::vector<double>&)>> field;
};

class ScalarExpr {
public:
    ScalarExpr() = default;

    // OP canonicalize: raw term list -> canonical form.  Validates atoms
    // against the chart; idempotent.
    static ScalarExpr canonicalize(const ChartPtr& chart, std::vector<Term> raw);

    static ScalarExpr zero(const ChartPtr& chart);
    static ScalarExpr constant(const ChartPtr& chart, Rational c);
    static ScalarExpr atom(const ChartPtr& chart, Atom a, Rational c = Rational(1));

    const ChartPtr& chart() const { return chart_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_symbolic_zero() const { return terms_.empty(); }
    bool is_constant(Rational* out = nullptr) const;
    bool has_opaque() const;
    bool references(int coord) const;
    bool has_negative_exponent() const;
    // Single term only: fails otherwise.
    bool is_monomial() const { return terms_.size() == 1; }

    ScalarExpr operator+(const ScalarExpr& o) const;
    ScalarExpr operator-(const ScalarExpr& o) const;
    ScalarExpr operator*(const ScalarExpr& o) const;
    ScalarExpr operator-() const;
    ScalarExpr scaled(const Rational& c) const;
    ScalarExpr pow(int e) const;  // e >= 0
    // Division by a single-term expression (monomial); exponents negate.
    ScalarExpr divided_by_monomial(const ScalarExpr& m) const;

    bool operator==(const ScalarExpr& o) const;
    bool operator!=(const ScalarExpr& o) const { return !(*this == o); }

    // OP differentiate: exact partial derivative, canonical.
    ScalarExpr differentiate(int coord) const;

    // OP evaluate: IEEE double value at a chart point.  Throws DomainPole when
    // a negative-exponent atom vanishes, UnboundOpaque for unbound symbols.
    double evaluate(const std::vector<double>& point, const OpaqueBindings* bindings = nullptr) const;

    // Substitute exact constants for coordinates and re-index the survivors
    // onto `target` via old->new index map (-1 = dropped, must be assigned).
    ScalarExpr substitute(const std::map<int, SubstConst>& assignment, const ChartPtr& target,
                          const std::vector<int>& index_map) const;

    // Replace an opaque symbol by explicit expressions per derivative order
    // (composed with the atom's stored argument shape is the caller's duty:
    // the replacement for order k is used verbatim).
    ScalarExpr substitute_opaque(int sym, const std::vector<ScalarExpr>& per_order) const;

    std::string str() const;  // deterministic serialization

    enum class ZeroKind { SymbolicZero, ProbablyZero, NonZero };
    struct ZeroResult {
        ZeroKind kind;
        std::vector<double> witness;  // NonZero only
        double witness_value = 0.0;
    };
    // OP is_zero: symbolic first, then 64 seeded samples at tol 1e-9.
    ZeroResult is_zero(uint64_t seed = 42, const OpaqueBindings* bindings = nullptr) const;

private:
    ChartPtr chart_;
    std::vector<Term> terms_;

    void validate_atoms() const;
    void normalize();
};

// Flat numeric program for grid sweeps: atoms lowered to doubles once so the
// hot loops avoid repeated multiprecision conversions.  Opaque atoms are not
// supported; callers fall back to ScalarExpr::evaluate with bindings.
class CompiledExpr {
public:
    CompiledExpr() = default;
    explicit CompiledExpr(const ScalarExpr& e);

    bool ok() const { return ok_; }
    double evaluate(const std::vector<double>& point) const;  // throws DomainPole

private:
    struct Op {
        AtomKind kind;
        TrigArg arg;
        int coord;
        int exponent;
    };
    struct CTerm {
        double coeff;
        std::vector<Op> ops;
    };
    std::vector<CTerm> terms_;
    bool ok_ = false;
};

// Convenience builders for expressions on a chart.
ScalarExpr sx_coord(const ChartPtr& c, int i, int e = 1);
ScalarExpr sx_sin(const ChartPtr& c, int i, TrigArg arg = TrigArg::Plain, int e = 1);
ScalarExpr sx_cos(const ChartPtr& c, int i, TrigArg arg = TrigArg::Plain, int e = 1);
ScalarExpr sx_const(const ChartPtr& c, Rational q);
ScalarExpr sx_opaque(const ChartPtr& c, int sym, int coord, TrigArg arg = TrigArg::Plain,
                     int order = 0);

}  // namespace lutzlab
