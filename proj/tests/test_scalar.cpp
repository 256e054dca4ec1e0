#include "lutzlab/scalar.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace lutzlab;
using namespace lutzlab::testing;

namespace {
const double kPi = std::acos(-1.0);
}

TEST_CASE("pythagorean collapse") {
    ChartPtr c = Chart::cylinder(1);  // phi, r1, th1
    ScalarExpr e = sx_sin(c, 1, TrigArg::Squared, 2) + sx_cos(c, 1, TrigArg::Squared, 2);
    CHECK(e == sx_const(c, 1));

    // commutative merge
    ScalarExpr a = sx_cos(c, 1, TrigArg::Squared) * sx_cos(c, 1, TrigArg::Squared);
    CHECK(a == sx_cos(c, 1, TrigArg::Squared, 2));
}

TEST_CASE("bracket expansion for n=2 against sampling, then canonically") {
    ChartPtr c = Chart::cylinder(2);
    int r1 = 1, r2 = 3;
    auto cc = [&](int i, int e) { return sx_cos(c, i, TrigArg::Squared, e); };
    auto ss = [&](int i, int e) { return sx_sin(c, i, TrigArg::Squared, e); };
    ScalarExpr lhs = cc(r1, 2) * cc(r2, 2) + ss(r1, 2) * cc(r2, 2) + cc(r1, 2) * ss(r2, 2);
    ScalarExpr rhs = cc(r1, 2) + cc(r2, 2) - cc(r1, 2) * cc(r2, 2);

    // numeric oracle first: 64 seeded points, tol 1e-12
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 64; ++k) {
        auto p = c->sample_point(rng);
        double c1 = std::cos(p[1] * p[1]), c2 = std::cos(p[3] * p[3]);
        double s1 = std::sin(p[1] * p[1]), s2 = std::sin(p[3] * p[3]);
        double direct = c1 * c1 * c2 * c2 + s1 * s1 * c2 * c2 + c1 * c1 * s2 * s2;
        CHECK(lhs.evaluate(p) == doctest::Approx(direct).epsilon(1e-12));
        CHECK(rhs.evaluate(p) == doctest::Approx(direct).epsilon(1e-12));
    }
    CHECK(lhs == rhs);
}

TEST_CASE("canonicalize rejects ill-formed atoms") {
    ChartPtr c = Chart::cylinder(1);
    CHECK_THROWS_AS(ScalarExpr::atom(c, Atom::coord_pow(0, -1)), IllFormedAtom);   // angle^-1
    CHECK_THROWS_AS(ScalarExpr::atom(c, Atom::sin_of(0, TrigArg::Squared)), IllFormedAtom);
    CHECK_NOTHROW(ScalarExpr::atom(c, Atom::coord_pow(1, -2)));  // radial^-2 fine
}

TEST_CASE("differentiate: chain rule and tan derivative") {
    ChartPtr c = Chart::cylinder(1);
    // d/dr sin(r^2) = 2 r cos(r^2)
    ScalarExpr d = sx_sin(c, 1, TrigArg::Squared).differentiate(1);
    CHECK(d == sx_coord(c, 1).scaled(2) * sx_cos(c, 1, TrigArg::Squared));
    // d/dth cos(r^2) = 0
    CHECK(sx_cos(c, 1, TrigArg::Squared).differentiate(2).is_symbolic_zero());

    // d/ds (cos s)^-1 sin s = (cos s)^-2 with a finite-difference oracle
    ChartPtr g = Chart::giroux(1);  // s1, th1
    ScalarExpr tan_e = sx_cos(g, 0, TrigArg::Plain, -1) * sx_sin(g, 0);
    ScalarExpr dt = tan_e.differentiate(0);
    CHECK(dt == sx_cos(g, 0, TrigArg::Plain, -2));
    std::mt19937_64 rng(7);
    for (int k = 0; k < 16; ++k) {
        auto p = sample_interior(g, rng);
        CHECK(dt.evaluate(p) == doctest::Approx(fd_partial(tan_e, p, 0)).epsilon(1e-8));
    }
}

TEST_CASE("evaluate: exact zeros and poles") {
    ChartPtr c = Chart::cylinder(1);
    ScalarExpr e = sx_cos(c, 1, TrigArg::Squared);
    std::vector<double> p{0.0, std::sqrt(kPi / 2), 0.0};
    CHECK(std::abs(e.evaluate(p)) < 1e-12);

    // Eq-(3)-style zero of the n=2 bracket at r1 = r2 = sqrt(pi/2)
    ChartPtr c2 = Chart::cylinder(2);
    ScalarExpr br = sx_cos(c2, 1, TrigArg::Squared, 2) + sx_cos(c2, 3, TrigArg::Squared, 2) -
                    sx_cos(c2, 1, TrigArg::Squared, 2) * sx_cos(c2, 3, TrigArg::Squared, 2);
    std::vector<double> q{0.0, std::sqrt(kPi / 2), 0.0, std::sqrt(kPi / 2), 0.0};
    CHECK(std::abs(br.evaluate(q)) < 1e-12);

    // prod cos s_i at s_i = pi/2 vanishes; its inverse poles there
    ChartPtr g = Chart::giroux(2);
    ScalarExpr prod = sx_cos(g, 0) * sx_cos(g, 2);
    std::vector<double> s{kPi / 2, 0.0, kPi / 2, 0.0};
    CHECK(std::abs(prod.evaluate(s)) < 1e-12);
    ScalarExpr inv = sx_cos(g, 0, TrigArg::Plain, -1);
    CHECK_THROWS_AS(inv.evaluate(s), DomainPole);
}

TEST_CASE("is_zero trichotomy") {
    ChartPtr c = Chart::cylinder(1);
    CHECK(ScalarExpr::zero(c).is_zero().kind == ScalarExpr::ZeroKind::SymbolicZero);
    ScalarExpr pyth = sx_sin(c, 1, TrigArg::Squared, 2) + sx_cos(c, 1, TrigArg::Squared, 2) -
                      sx_const(c, 1);
    CHECK(pyth.is_zero().kind == ScalarExpr::ZeroKind::SymbolicZero);
    auto nz = sx_cos(c, 1, TrigArg::Squared).is_zero();
    CHECK(nz.kind == ScalarExpr::ZeroKind::NonZero);
    CHECK(std::abs(std::cos(nz.witness[1] * nz.witness[1]) - nz.witness_value) < 1e-12);
}

TEST_CASE("canonicalize idempotent on random expressions") {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 1000; ++k) {
        ChartPtr c = random_chart(rng);
        ScalarExpr e = random_expr(c, rng);
        ScalarExpr again = ScalarExpr::canonicalize(c, e.terms());
        CHECK(e == again);
    }
}

TEST_CASE("ring laws numerically") {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 200; ++k) {
        ChartPtr c = random_chart(rng);
        ScalarExpr a = random_expr(c, rng), b = random_expr(c, rng), d = random_expr(c, rng);
        ScalarExpr lhs = a * (b + d);
        ScalarExpr rhs = a * b + a * d;
        CHECK(lhs == rhs);  // distributivity lands in the same canonical form
        auto p = sample_interior(c, rng);
        double lv = lhs.evaluate(p), rv = rhs.evaluate(p);
        CHECK(lv == doctest::Approx(rv).epsilon(1e-12));
    }
}

TEST_CASE("mixed partials commute") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 200; ++k) {
        ChartPtr c = random_chart(rng);
        ScalarExpr e = random_expr(c, rng);
        int i = static_cast<int>(rng() % static_cast<uint64_t>(c->dim()));
        int j = static_cast<int>(rng() % static_cast<uint64_t>(c->dim()));
        CHECK(e.differentiate(i).differentiate(j) == e.differentiate(j).differentiate(i));
    }
}

TEST_CASE("differentiate agrees with central differences") {
    std::mt19937_64 rng(19);
    for (int k = 0; k < 100; ++k) {
        ChartPtr c = random_chart(rng);
        ScalarExpr e = random_expr(c, rng);
        int i = static_cast<int>(rng() % static_cast<uint64_t>(c->dim()));
        ScalarExpr de = e.differentiate(i);
        auto p = sample_interior(c, rng);
        double expect = fd_partial(e, p, i);
        CHECK(de.evaluate(p) == doctest::Approx(expect).epsilon(1e-6).scale(1.0));
    }
}

TEST_CASE("substitution with exact radial constants") {
    ChartPtr c = Chart::cylinder(2);
    // sin(r2^2) + cos(r2^2) at r2 = sqrt(pi) is exactly -1
    ScalarExpr e = sx_sin(c, 3, TrigArg::Squared) + sx_cos(c, 3, TrigArg::Squared);
    std::map<int, SubstConst> asg{{3, SubstConst::sqrt_pi(1)}};
    auto rest = make_restriction(c, asg);
    ScalarExpr sub = e.substitute(asg, rest.subchart, rest.index_map);
    CHECK(sub == sx_const(rest.subchart, -1));
}

TEST_CASE("opaque atoms: derivatives and substitution") {
    ChartPtr c = Chart::cylinder(1);
    int f = OpaqueTable::instance().intern("profile_f", false, false);
    ScalarExpr e = sx_opaque(c, f, 1, TrigArg::Squared);  // f(r^2)
    ScalarExpr de = e.differentiate(1);                   // 2 r f'(r^2)
    ScalarExpr expect = sx_coord(c, 1).scaled(2) * sx_opaque(c, f, 1, TrigArg::Squared, 1);
    CHECK(de == expect);

    // plateau substitution f(s) = s
    ScalarExpr sub = e.substitute_opaque(f, {sx_coord(c, 1, 2)});
    CHECK(sub == sx_coord(c, 1, 2));

    // bindings for numeric evaluation
    OpaqueBindings b;
    b.unary[f] = {[](double s) { return s * s; }, [](double s) { return 2 * s; }};
    std::vector<double> p{0.0, 1.3, 0.0};
    CHECK(e.evaluate(p, &b) == doctest::Approx(std::pow(1.3 * 1.3, 2)));
    CHECK_THROWS_AS(e.evaluate(p), UnboundOpaque);
}

TEST_CASE("compiled evaluator matches the interpreter") {
    std::mt19937_64 rng(23);
    for (int k = 0; k < 50; ++k) {
        ChartPtr c = random_chart(rng);
        ScalarExpr e = random_expr(c, rng);
        CompiledExpr fast(e);
        REQUIRE(fast.ok());
        auto p = sample_interior(c, rng);
        CHECK(fast.evaluate(p) == doctest::Approx(e.evaluate(p)).epsilon(1e-14));
    }
}

TEST_CASE("serialization is deterministic and sorted") {
    ChartPtr c = Chart::cylinder(1);
    ScalarExpr a = sx_cos(c, 1, TrigArg::Squared) * sx_sin(c, 1, TrigArg::Squared) +
                   sx_coord(c, 1, 2).scaled(Rational(3, 2));
    ScalarExpr b = sx_coord(c, 1, 2).scaled(Rational(3, 2)) +
                   sx_sin(c, 1, TrigArg::Squared) * sx_cos(c, 1, TrigArg::Squared);
    CHECK(a.str() == b.str());
    CHECK(!a.str().empty());
}
