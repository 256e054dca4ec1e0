// oracles.hpp -- implementation-independent references for the property
// suites: finite differences for d, full antisymmetrization for wedge, and
// seeded random generators for expressions and forms.
#pragma once

#include "lutzlab/forms.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

namespace lutzlab::testing {

inline std::vector<double> sample_interior(const ChartPtr& chart, std::mt19937_64& rng) {
    // keep away from radial axes and pole margins so central differences fit
    std::vector<double> p(static_cast<size_t>(chart->dim()));
    for (int i = 0; i < chart->dim(); ++i) {
        auto [lo, hi] = chart->sample_window(i);
        std::uniform_real_distribution<double> d(lo + 0.05 * (hi - lo), hi - 0.05 * (hi - lo));
        p[static_cast<size_t>(i)] = d(rng);
    }
    return p;
}

// central finite difference of a scalar
inline double fd_partial(const ScalarExpr& e, const std::vector<double>& p, int coord,
                         double h = 1e-5) {
    std::vector<double> a = p, b = p;
    a[static_cast<size_t>(coord)] += h;
    b[static_cast<size_t>(coord)] -= h;
    return (e.evaluate(a) - e.evaluate(b)) / (2 * h);
}

// value of a p-form on a tuple of coordinate basis vectors
inline double form_on_basis(const DifferentialForm& f, const std::vector<double>& pt,
                            std::vector<int> idx) {
    int sign = 1;
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return 0.0;
            if (idx[i] > idx[j]) sign = -sign;
        }
    std::sort(idx.begin(), idx.end());
    auto it = f.components().find(idx);
    if (it == f.components().end()) return 0.0;
    return sign * it->second.evaluate(pt);
}

// wedge via full antisymmetrization over permutations:
// (a ^ b)(e_I) = 1/(p! q!) sum_sigma sign(sigma) a(...) b(...)
inline double wedge_oracle(const DifferentialForm& a, const DifferentialForm& b,
                           const std::vector<double>& pt, const std::vector<int>& idx) {
    int p = a.degree(), q = b.degree();
    std::vector<int> perm(idx.size());
    for (size_t i = 0; i < idx.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end());
    double total = 0.0;
    double fact_p = 1, fact_q = 1;
    for (int i = 2; i <= p; ++i) fact_p *= i;
    for (int i = 2; i <= q; ++i) fact_q *= i;
    do {
        int sign = 1;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) sign = -sign;
        std::vector<int> ia, ib;
        for (int i = 0; i < p; ++i) ia.push_back(idx[static_cast<size_t>(perm[static_cast<size_t>(i)])]);
        for (int i = p; i < p + q; ++i)
            ib.push_back(idx[static_cast<size_t>(perm[static_cast<size_t>(i)])]);
        total += sign * form_on_basis(a, pt, ia) * form_on_basis(b, pt, ib);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / (fact_p * fact_q);
}

// exterior derivative via central differences:
// (d a)(e_{i0..ip}) = sum_k (-1)^k  d/dx_{ik} [ a(e_{i minus k}) ]
inline double d_oracle(const DifferentialForm& a, const std::vector<double>& pt,
                       const std::vector<int>& idx, double h = 1e-5) {
    double total = 0.0;
    for (size_t k = 0; k < idx.size(); ++k) {
        std::vector<int> rest;
        for (size_t j = 0; j < idx.size(); ++j)
            if (j != k) rest.push_back(idx[j]);
        std::vector<double> hi = pt, lo = pt;
        hi[static_cast<size_t>(idx[k])] += h;
        lo[static_cast<size_t>(idx[k])] -= h;
        double diff = (form_on_basis(a, hi, rest) - form_on_basis(a, lo, rest)) / (2 * h);
        total += (k % 2 == 0 ? 1.0 : -1.0) * diff;
    }
    return total;
}

// --- random generators (fixed seeds at call sites) ---

inline ScalarExpr random_expr(const ChartPtr& chart, std::mt19937_64& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms), natoms(0, 2), coord(0, chart->dim() - 1),
        kind(0, 2), expo(1, 2), num(-4, 4), den(1, 3);
    std::vector<Term> terms;
    int nt = nterms(rng);
    for (int t = 0; t < nt; ++t) {
        Term term;
        int n = num(rng);
        if (n == 0) n = 1;
        term.coeff = Rational(n, den(rng));
        int na = natoms(rng);
        for (int a = 0; a < na; ++a) {
            int i = coord(rng);
            CoordKind ck = chart->coord(i).kind;
            switch (kind(rng)) {
                case 0: term.atoms.push_back(Atom::coord_pow(i, expo(rng))); break;
                case 1: {
                    TrigArg arg = (ck == CoordKind::Radial && rng() % 2) ? TrigArg::Squared
                                                                         : TrigArg::Plain;
                    term.atoms.push_back(Atom::sin_of(i, arg, expo(rng)));
                    break;
                }
                default: {
                    TrigArg arg = (ck == CoordKind::Radial && rng() % 2) ? TrigArg::Squared
                                                                         : TrigArg::Plain;
                    term.atoms.push_back(Atom::cos_of(i, arg, expo(rng)));
                    break;
                }
            }
        }
        terms.push_back(std::move(term));
    }
    return ScalarExpr::canonicalize(chart, std::move(terms));
}

inline DifferentialForm random_form(const ChartPtr& chart, int degree, std::mt19937_64& rng,
                                    int max_comps = 3) {
    DifferentialForm f(chart, degree);
    std::uniform_int_distribution<int> ncomp(1, max_comps);
    int n = ncomp(rng);
    for (int c = 0; c < n; ++c) {
        std::vector<int> all(static_cast<size_t>(chart->dim()));
        for (int i = 0; i < chart->dim(); ++i) all[static_cast<size_t>(i)] = i;
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<int> key(all.begin(), all.begin() + degree);
        std::sort(key.begin(), key.end());
        f.add_component(key, random_expr(chart, rng, 2));
    }
    return f;
}

inline VectorField random_field(const ChartPtr& chart, std::mt19937_64& rng) {
    VectorField v(chart);
    std::uniform_int_distribution<int> ncomp(1, 3), coord(0, chart->dim() - 1);
    int n = ncomp(rng);
    for (int c = 0; c < n; ++c) v.set_component(coord(rng), random_expr(chart, rng, 2));
    return v;
}

inline ChartPtr random_chart(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dim(2, 4), kind(0, 2);
    int d = dim(rng);
    std::vector<Coordinate> cs;
    for (int i = 0; i < d; ++i) {
        Coordinate c;
        c.name = "x" + std::to_string(i);
        switch (kind(rng)) {
            case 0: c.kind = CoordKind::Angle; break;
            case 1: c.kind = CoordKind::Radial; break;
            default: c.kind = CoordKind::Linear; break;
        }
        cs.push_back(c);
    }
    return Chart::make(std::move(cs));
}

}  // namespace lutzlab::testing
