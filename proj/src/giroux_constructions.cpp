// giroux_constructions.cpp -- Giroux domains, the pre-Lagrangian blow-up
// coordinate check, and the overtwisted-disc model.
#include "lutzlab/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace lutzlab {

namespace {
constexpr double kPi = 3.141592653589793238462643;

// giroux chart layout: s_i at 2(i-1), th_i at 2i-1  (i = 1..n)
int gs_idx(int i) { return 2 * (i - 1); }
int gth_idx(int i) { return 2 * i - 1; }

// determinant of the n x n matrix with unit diagonal and sin s_k sin s_l off
// the diagonal, expanded over permutations (n is small here)
ScalarExpr sin_matrix_det(const ChartPtr& chart, int n) {
    std::vector<int> perm(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
    ScalarExpr det = ScalarExpr::zero(chart);
    do {
        int sign = 1;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(j)]) sign = -sign;
        ScalarExpr term = sx_const(chart, sign);
        for (int i = 0; i < n; ++i) {
            int j = perm[static_cast<size_t>(i)];
            if (i == j) continue;
            term = term * sx_sin(chart, gs_idx(i + 1)) * sx_sin(chart, gs_idx(j + 1));
        }
        det = det + term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

}  // namespace

// ---------------------------------------------------------------------------
// giroux-domain

NamedConstruction giroux_domain(int n) {
    if (n < 1) throw BadIndex("giroux-domain needs n >= 1");
    NamedConstruction nc;
    nc.name = "giroux-domain";
    nc.chart = Chart::giroux(n);
    const ChartPtr& chart = nc.chart;

    ScalarExpr inv_prod = sx_const(chart, 1);
    for (int i = 1; i <= n; ++i) inv_prod = inv_prod * sx_cos(chart, gs_idx(i), TrigArg::Plain, -1);
    DifferentialForm beta(chart, 1);
    for (int j = 1; j <= n; ++j)
        beta.set_component({gth_idx(j)}, inv_prod * sx_sin(chart, gs_idx(j)));
    nc.forms["beta"] = beta;

    // (a) omega = d beta matches the printed expansion
    DifferentialForm omega = ext_d(beta);
    nc.forms["omega"] = omega;
    {
        DifferentialForm expect(chart, 2);
        for (int j = 1; j <= n; ++j) {
            // (1/cos s_j) ds_j ^ dth_j, scaled by 1/prod cos
            ScalarExpr c = inv_prod * sx_cos(chart, gs_idx(j), TrigArg::Plain, -1);
            expect.add_component({gs_idx(j), gth_idx(j)}, c);
        }
        for (int k = 1; k <= n; ++k) {
            for (int l = 1; l <= n; ++l) {
                if (k == l) continue;
                // (sin s_k sin s_l / cos s_l) ds_l ^ dth_k
                ScalarExpr c = inv_prod * sx_sin(chart, gs_idx(k)) * sx_sin(chart, gs_idx(l)) *
                               sx_cos(chart, gs_idx(l), TrigArg::Plain, -1);
                IndexTuple key{gs_idx(l), gth_idx(k)};
                if (key[0] > key[1]) {
                    std::swap(key[0], key[1]);
                    c = -c;
                }
                expect.add_component(key, c);
            }
        }
        nc.check_symbolic("omega-printed-match", omega == expect, omega.str());
    }

    // (b) omega^n = n! (prod cos)^{-(n+1)} det(...) vol
    {
        DifferentialForm top = wedge_pow(omega, n);
        ScalarExpr got = top_ratio(top, coordinate_volume(chart));
        ScalarExpr det = sin_matrix_det(chart, n);
        nc.scalars["det"] = det;
        ScalarExpr expect = det.scaled(factorial(n));
        for (int rep = 0; rep < n + 1; ++rep) expect = expect * inv_prod;
        nc.check_symbolic("omega-power-determinant", got == expect, got.str());

        // (c) determinant grid-positive on the interior with margin 1e-3
        std::vector<std::pair<double, double>> box;
        for (int i = 0; i < chart->dim(); ++i) {
            if (chart->coord(i).kind == CoordKind::BoundedLinear)
                box.push_back({-kPi / 2 + 1e-3, kPi / 2 - 1e-3});
            else
                box.push_back({0.0, 2 * kPi});
        }
        Region reg(chart, std::move(box));
        GridStats st = reg.grid_stats(det);
        Certificate cert;
        cert.kind = CertKind::GridPositive;
        cert.name = "giroux/det-positive";
        cert.tolerance = 1e-9;
        cert.min = st.min;
        cert.max = st.max;
        cert.samples = st.samples;
        cert.pass = st.min > 1e-9;
        nc.certificates.push_back(cert);
        nc.check_grid("det-positive", cert.pass);
    }

    // (d) f beta = sum sin s_i dth_i is pole-free and restricts to the faces
    {
        ScalarExpr f = sx_const(chart, 1);
        for (int i = 1; i <= n; ++i) f = f * sx_cos(chart, gs_idx(i));
        DifferentialForm fbeta = beta.scaled_expr(f);
        bool pole_free = true;
        for (const auto& [k, v] : fbeta.components()) {
            (void)k;
            if (v.has_negative_exponent()) pole_free = false;
        }
        DifferentialForm expect(chart, 1);
        for (int i = 1; i <= n; ++i)
            expect.set_component({gth_idx(i)}, sx_sin(chart, gs_idx(i)));
        nc.check_symbolic("f-beta-pole-free", pole_free && fbeta == expect, fbeta.str());
        nc.forms["f_beta"] = fbeta;

        for (int i = 1; i <= n && i <= 2; ++i) {
            for (int sgn : {+1, -1}) {
                auto rest = make_restriction(
                    chart, {{gs_idx(i), SubstConst::pi_multiple(Rational(sgn, 2))}});
                DifferentialForm face = restrict_form(fbeta, rest);
                DifferentialForm face_expect(rest.subchart, 1);
                face_expect.add_component({rest.index_map[static_cast<size_t>(gth_idx(i))]},
                                          sx_const(rest.subchart, sgn));
                for (int j = 1; j <= n; ++j)
                    if (j != i)
                        face_expect.add_component(
                            {rest.index_map[static_cast<size_t>(gth_idx(j))]},
                            sx_sin(rest.subchart,
                                   rest.index_map[static_cast<size_t>(gs_idx(j))]));
                nc.check_symbolic("face-restriction-s" + std::to_string(i) +
                                      (sgn > 0 ? "+" : "-"),
                                  face == face_expect, face.str());
            }
        }
    }

    // (e) contactization f dphi + f beta on the product chart
    {
        ChartPtr cc = Chart::giroux_contact(n);
        auto cs = [&](int i) { return 1 + 2 * (i - 1); };   // s_i on the contact chart
        auto cth = [&](int i) { return 2 + 2 * (i - 1); };  // th_i
        DifferentialForm alpha(cc, 1);
        ScalarExpr prod = sx_const(cc, 1);
        for (int i = 1; i <= n; ++i) prod = prod * sx_cos(cc, cs(i));
        alpha.set_component({0}, prod);
        for (int i = 1; i <= n; ++i) alpha.set_component({cth(i)}, sx_sin(cc, cs(i)));
        nc.forms["contactization"] = alpha;

        // equality f dphi + (f beta lifted) == alpha, built independently
        DifferentialForm lifted(cc, 1);
        lifted.set_component({0}, prod);
        ScalarExpr invp = sx_const(cc, 1);
        for (int i = 1; i <= n; ++i) invp = invp * sx_cos(cc, cs(i), TrigArg::Plain, -1);
        for (int j = 1; j <= n; ++j)
            lifted.add_component({cth(j)}, prod * invp * sx_sin(cc, cs(j)));
        nc.check_symbolic("contactization-cancellation", lifted == alpha);

        std::vector<std::pair<double, double>> box;
        for (int i = 0; i < cc->dim(); ++i) {
            if (cc->coord(i).kind == CoordKind::BoundedLinear)
                box.push_back({-kPi / 2 + 1e-3, kPi / 2 - 1e-3});
            else
                box.push_back({0.0, 2 * kPi});
        }
        Region reg(cc, std::move(box));
        Classification cls = classify(alpha, reg);
        nc.certificates.push_back(cls.cert);
        nc.check_grid("contactization-contact", cls.cls == ContactClass::Contact);

        if (n == 1) {
            DifferentialForm expect(cc, 1);
            expect.set_component({0}, sx_cos(cc, 1));
            expect.set_component({2}, sx_sin(cc, 1));
            nc.check_symbolic("pi-torsion-form", alpha == expect, alpha.str());
        }
    }

    // annulus model (n = 1): beta = cot s dth on s in (0, pi)
    if (n == 1) {
        ChartPtr ac = Chart::make({{"s", CoordKind::BoundedLinear, 0.0, kPi},
                                   {"th", CoordKind::Angle},
                                   {"t", CoordKind::Angle}});
        DifferentialForm abeta(ac, 1);
        abeta.set_component({1}, sx_cos(ac, 0) * sx_sin(ac, 0, TrigArg::Plain, -1));
        DifferentialForm aomega = ext_d(abeta);
        DifferentialForm aexpect(ac, 2);
        aexpect.set_component({0, 1}, -sx_sin(ac, 0, TrigArg::Plain, -2));
        nc.check_symbolic("annulus-omega", aomega == aexpect, aomega.str());
        // f beta with f = sin s extends to cos s dth
        DifferentialForm afbeta = abeta.scaled_expr(sx_sin(ac, 0));
        DifferentialForm afb_expect(ac, 1);
        afb_expect.set_component({1}, sx_cos(ac, 0));
        nc.check_symbolic("annulus-f-beta", afbeta == afb_expect);
        // contactization sin s dt + cos s dth
        DifferentialForm ac_form(ac, 1);
        ac_form.set_component({2}, sx_sin(ac, 0));
        ac_form.set_component({1}, sx_cos(ac, 0));
        DifferentialForm built = afbeta;
        built.add_component({2}, sx_sin(ac, 0));
        nc.check_symbolic("annulus-contactization", built == ac_form);
    }
    return nc;
}

// ---------------------------------------------------------------------------
// prelag-blowup

namespace {

// substitute coordinate `coord` (positive powers only) by `replacement` and
// remap the remaining coordinates onto the target chart
ScalarExpr substitute_coord_by_expr(const ScalarExpr& e, int coord, const ScalarExpr& replacement,
                                    const ChartPtr& target, const std::vector<int>& index_map) {
    ScalarExpr total = ScalarExpr::zero(target);
    for (const auto& t : e.terms()) {
        ScalarExpr piece = sx_const(target, t.coeff);
        for (const auto& a : t.atoms) {
            if (a.coord == coord) {
                if (a.kind != AtomKind::Coord || a.exponent < 0)
                    throw BadAssignment("unsupported substitution shape");
                piece = piece * replacement.pow(a.exponent);
            } else {
                Atom na = a;
                if (a.coord >= 0) na.coord = static_cast<int16_t>(index_map[static_cast<size_t>(a.coord)]);
                piece = piece * ScalarExpr::atom(target, na);
            }
        }
        total = total + piece;
    }
    return total;
}

}  // namespace

NamedConstruction prelag_blowup_check(int n) {
    if (n < 1) throw BadIndex("prelag-blowup needs n >= 1");
    NamedConstruction nc;
    nc.name = "prelag-blowup";
    ChartPtr disk = Chart::torus_disk(n);
    ChartPtr sphere = Chart::torus_sphere(n);
    nc.chart = sphere;

    // eta0 = dphi + sum s_i dth_i on the disk chart
    DifferentialForm eta0(disk, 1);
    eta0.set_component({0}, sx_const(disk, 1));
    for (int i = 1; i <= n; ++i) eta0.set_component({i}, sx_coord(disk, n + i));
    nc.forms["eta0"] = eta0;

    // spherical substitution s_i -> rho * prod_{k<i} sin psi_k * (cos psi_i | 1)
    int rho = sphere->index("rho");
    auto psi = [&](int k) { return sphere->index("psi" + std::to_string(k)); };
    auto spherical = [&](int i) {
        ScalarExpr e = sx_coord(sphere, rho);
        for (int k = 1; k < i; ++k) e = e * sx_sin(sphere, psi(k));
        if (i < n) e = e * sx_cos(sphere, psi(i));
        return e;
    };

    // pullback: phi, th_i correspond; s_i coefficients substituted
    std::vector<int> index_map(static_cast<size_t>(disk->dim()), -1);
    index_map[0] = 0;
    for (int i = 1; i <= n; ++i) index_map[static_cast<size_t>(i)] = i;
    DifferentialForm pulled(sphere, 1);
    for (const auto& [key, comp] : eta0.components()) {
        int old = key[0];
        if (old > n) continue;  // ds_i components (none for eta0)
        // eta0's coefficients reference at most one s_i each
        ScalarExpr out = ScalarExpr::zero(sphere);
        bool replaced = false;
        for (int i = n; i >= 1 && !replaced; --i) {
            if (comp.references(n + i)) {
                out = substitute_coord_by_expr(comp, n + i, spherical(i), sphere, index_map);
                replaced = true;
            }
        }
        if (!replaced)
            out = substitute_coord_by_expr(comp, -2, sx_const(sphere, 0), sphere, index_map);
        pulled.add_component({index_map[static_cast<size_t>(old)]}, out);
    }
    nc.forms["eta0_spherical"] = pulled;

    // printed pattern on the sphere chart
    DifferentialForm printed(sphere, 1);
    printed.set_component({0}, sx_const(sphere, 1));
    for (int i = 1; i <= n; ++i) printed.add_component({i}, spherical(i));
    nc.check_symbolic("spherical-form-match", pulled == printed, pulled.str());

    // sphere identity: sum s_i(rho, psi)^2 = rho^2
    ScalarExpr sq = ScalarExpr::zero(sphere);
    for (int i = 1; i <= n; ++i) sq = sq + spherical(i).pow(2);
    ScalarExpr diff = sq - sx_coord(sphere, rho, 2);
    nc.check_symbolic("sphere-identity", diff.is_symbolic_zero(), diff.str());

    // rho = const slice carries no d rho
    {
        auto rest = make_restriction(sphere, {{rho, SubstConst::exact(1)}});
        DifferentialForm sliced = restrict_form(pulled, rest);
        bool ok = sliced.degree() == 1;
        for (const auto& [k, v] : sliced.components()) {
            (void)v;
            ok = ok && !k.empty();
        }
        nc.check_symbolic("rho-slice-no-drho", ok, sliced.str());
    }
    return nc;
}

// ---------------------------------------------------------------------------
// otw-disc

NamedConstruction otw_disc_model(int n, const OtwOptions& opt) {
    if (n < 2) throw BadIndex("otw-disc needs n >= 2");
    NamedConstruction nc;
    nc.name = "otw-disc";
    nc.chart = Chart::otw(n);
    const ChartPtr& chart = nc.chart;
    const double eps = opt.eps, C = opt.C;

    int z = 0;
    auto ri = [&](int i) { return 2 * i - 1; };   // i = 1..n-1
    auto phi_i = [&](int i) { return 2 * i; };
    int r = 2 * n - 1, phi = 2 * n;
    (void)phi_i;

    // ---- symbolic part: alpha_rho with the profile opaque ----
    auto& tab = OpaqueTable::instance();
    int P = tab.intern("rho", false, false);
    DifferentialForm alpha(chart, 1);
    alpha.set_component({z}, sx_const(chart, 1));
    for (int i = 1; i < n; ++i) alpha.set_component({phi_i(i)}, sx_coord(chart, ri(i), 2));
    alpha.set_component({phi}, sx_opaque(chart, P, r, TrigArg::Squared));
    nc.forms["alpha_rho"] = alpha;

    DifferentialForm standard(chart, 1);
    standard.set_component({z}, sx_const(chart, 1));
    for (int i = 1; i < n; ++i) standard.set_component({phi_i(i)}, sx_coord(chart, ri(i), 2));
    standard.add_component({phi}, sx_coord(chart, r, 2));

    // plateau rho(s) = s: alpha reduces to the standard form
    {
        DifferentialForm sub(chart, 1);
        for (const auto& [k, v] : alpha.components())
            sub.set_component(k, v.substitute_opaque(
                                     P, {sx_coord(chart, r, 2), sx_const(chart, 1)}));
        nc.check_symbolic("plateau-standard-form", sub == standard, sub.str());
    }
    // collar rho(s) = s - C: d alpha agrees with the standard one
    {
        Rational cq(static_cast<long long>(std::llround(C * 1024)), 1024);
        DifferentialForm sub(chart, 1);
        for (const auto& [k, v] : alpha.components())
            sub.set_component(k, v.substitute_opaque(
                                     P, {sx_coord(chart, r, 2) - sx_const(chart, cq),
                                         sx_const(chart, 1)}));
        nc.check_symbolic("collar-shift-d-alpha", ext_d(sub) == ext_d(standard));
    }
    // volume identity with the opaque profile:
    // alpha ^ (d alpha)^n = n! 2^n (prod r_i) r rho'(r^2) vol
    {
        DifferentialForm top = wedge(alpha, wedge_pow(ext_d(alpha), n));
        ScalarExpr got = top_ratio(top, coordinate_volume(chart));
        ScalarExpr expect = sx_const(chart, factorial(n) * rat_pow(Rational(2), n));
        for (int i = 1; i < n; ++i) expect = expect * sx_coord(chart, ri(i));
        expect = expect * sx_coord(chart, r) *
                 sx_opaque(chart, P, r, TrigArg::Squared, 1);
        nc.check_symbolic("volume-identity", got == expect, got.str());
    }

    // ---- profiles ----
    PiecewiseProfile keps = PiecewiseProfile::k_eps(eps, 4.0);
    nc.check_grid("k-eps-shape",
                  std::abs(keps(1 - eps)) < 1e-12 && std::abs(keps(1.0) - eps) < 1e-12 &&
                      keps.continuous() && keps.nondecreasing_on_grid(),
                  "k_eps plateau and slope");

    // interior depression so K < 0 strictly inside Delta_eps
    PiecewiseProfile chi = PiecewiseProfile::smooth_step(0.0, eps, 2.0);
    auto K = [&](double z_val, double rsq) {
        double base = keps(rsq) + keps(std::abs(z_val));
        double depth = std::min(1 - eps - rsq, 1 - eps - std::abs(z_val));
        double dip = depth > 0 ? 0.5 * chi(depth) : 0.0;
        return base - dip;
    };
    double minK = 0.0;
    for (int a = 0; a <= 40; ++a)
        for (int b = 0; b <= 40; ++b)
            minK = std::min(minK, K(-1 + 2.0 * a / 40, 1.0 * b / 40));
    if (!(C > -minK)) throw ProfileViolation("C must exceed -min K");
    nc.check_grid("C-exceeds-minK", true, "min K = " + std::to_string(minK));

    // rho family: identity ramp dropping by C on (a, K + C - kappa)
    const double ramp_a = eps / 5.0;
    const double kappa = opt.collar + 0.005;
    if (!(eps > kappa + ramp_a + 0.015 + 0.004))
        throw ProfileViolation("eps too small for a monotone boundary ramp");
    auto rho_of = [&](double z_val, double rsq_param) {
        double b = K(z_val, rsq_param) + C - kappa;
        return PiecewiseProfile::shift_ramp(ramp_a, b, C, b + C + 2.0);
    };

    // printed conditions at sampled parameters
    {
        bool cond1 = true, cond2 = true, cond3 = true;
        for (int a = 0; a <= 8; ++a) {
            for (int b = 0; b <= 8; ++b) {
                double zv = -1 + 2.0 * a / 8, rsq = 1.0 * b / 8;
                PiecewiseProfile rho = rho_of(zv, rsq);
                double Kv = K(zv, rsq);
                for (double s = 0; s <= ramp_a; s += ramp_a / 4)
                    cond1 = cond1 && std::abs(rho(s) - s) < 1e-12;
                for (double s = Kv + C; s <= Kv + C + 0.5; s += 0.1)
                    cond2 = cond2 && std::abs(rho(s) - (s - C)) < 1e-9;
                bool near_boundary = keps(rsq) + keps(std::abs(zv)) >= 0.095;
                if (near_boundary) {
                    for (double s = 0; s <= Kv + C; s += (Kv + C) / 64)
                        cond3 = cond3 && rho.deriv(s) > 0;
                }
            }
        }
        if (!(cond1 && cond2 && cond3))
            throw ProfileViolation("rho family violates a printed condition");
        nc.check_grid("rho-conditions", true, "plateau, shift and boundary monotonicity");
    }

    // ---- numeric: parameter terms drop out of alpha ^ (d alpha)^n ----
    // brute-force FD wedge at samples vs n! 2^n (prod r_i) r rho'
    {
        auto alpha_comps = [&](const std::vector<double>& p) {
            std::vector<double> a(static_cast<size_t>(chart->dim()), 0.0);
            a[static_cast<size_t>(z)] = 1.0;
            for (int i = 1; i < n; ++i) {
                double v = p[static_cast<size_t>(ri(i))];
                a[static_cast<size_t>(phi_i(i))] = v * v;
            }
            double rsq = 0;
            for (int i = 1; i < n; ++i)
                rsq += p[static_cast<size_t>(ri(i))] * p[static_cast<size_t>(ri(i))];
            double rv = p[static_cast<size_t>(r)];
            PiecewiseProfile rho = rho_of(p[static_cast<size_t>(z)], rsq);
            a[static_cast<size_t>(phi)] = rho(rv * rv);
            return a;
        };
        int dim = chart->dim();
        auto num_dalpha = [&](const std::vector<double>& p, int i, int j) {
            double h = 1e-5;
            auto pp = p, pm = p;
            pp[static_cast<size_t>(i)] += h;
            pm[static_cast<size_t>(i)] -= h;
            double dji = (alpha_comps(pp)[static_cast<size_t>(j)] -
                          alpha_comps(pm)[static_cast<size_t>(j)]) /
                         (2 * h);
            pp = p;
            pm = p;
            pp[static_cast<size_t>(j)] += h;
            pm[static_cast<size_t>(j)] -= h;
            double dij = (alpha_comps(pp)[static_cast<size_t>(i)] -
                          alpha_comps(pm)[static_cast<size_t>(i)]) /
                         (2 * h);
            return dji - dij;  // (d alpha)_{ij}
        };
        // evaluate alpha ^ (d alpha)^n / vol by full antisymmetrization
        auto coeff_at = [&](const std::vector<double>& p) {
            std::vector<int> idx(static_cast<size_t>(dim));
            for (int i = 0; i < dim; ++i) idx[static_cast<size_t>(i)] = i;
            auto a = alpha_comps(p);
            std::vector<std::vector<double>> d(static_cast<size_t>(dim),
                                               std::vector<double>(static_cast<size_t>(dim)));
            for (int i = 0; i < dim; ++i)
                for (int j = i + 1; j < dim; ++j) {
                    d[static_cast<size_t>(i)][static_cast<size_t>(j)] = num_dalpha(p, i, j);
                    d[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                        -d[static_cast<size_t>(i)][static_cast<size_t>(j)];
                }
            double total = 0;
            // sum over permutations: a_{s0} * prod d_{s(2k-1) s(2k)} / (2^n n!)
            std::sort(idx.begin(), idx.end());
            do {
                int sign = 1;
                for (int i = 0; i < dim; ++i)
                    for (int j = i + 1; j < dim; ++j)
                        if (idx[static_cast<size_t>(i)] > idx[static_cast<size_t>(j)]) sign = -sign;
                double v = a[static_cast<size_t>(idx[0])];
                for (int k = 0; k < n; ++k)
                    v *= d[static_cast<size_t>(idx[static_cast<size_t>(2 * k + 1)])]
                          [static_cast<size_t>(idx[static_cast<size_t>(2 * k + 2)])];
                total += sign * v;
            } while (std::next_permutation(idx.begin(), idx.end()));
            return total / std::pow(2.0, n);  // divide by the 2! of each d-alpha slot
        };
        bool ok = true;
        std::mt19937_64 rng(424242);
        std::uniform_real_distribution<double> uz(-0.9, 0.9), ur(0.05, 0.6), ua(0.1, 6.0),
            urr(0.2, 1.2);
        for (int trial = 0; trial < 6 && ok; ++trial) {
            std::vector<double> p(static_cast<size_t>(dim));
            p[static_cast<size_t>(z)] = uz(rng);
            for (int i = 1; i < n; ++i) {
                p[static_cast<size_t>(ri(i))] = ur(rng);
                p[static_cast<size_t>(phi_i(i))] = ua(rng);
            }
            p[static_cast<size_t>(r)] = urr(rng);
            p[static_cast<size_t>(phi)] = ua(rng);
            double got = coeff_at(p);
            double rsq = 0;
            for (int i = 1; i < n; ++i)
                rsq += p[static_cast<size_t>(ri(i))] * p[static_cast<size_t>(ri(i))];
            PiecewiseProfile rho = rho_of(p[static_cast<size_t>(z)], rsq);
            double expect = to_double(factorial(n)) * std::pow(2.0, n) *
                            rho.deriv(p[static_cast<size_t>(r)] * p[static_cast<size_t>(r)]) *
                            p[static_cast<size_t>(r)];
            for (int i = 1; i < n; ++i) expect *= p[static_cast<size_t>(ri(i))];
            if (std::abs(got - expect) > 1e-4 * std::max(1.0, std::abs(expect))) ok = false;
        }
        nc.check_grid("parameter-terms-drop", ok,
                      "FD wedge equals n! 2^n (prod r_i) r rho' at samples");
    }

    // ---- contact certificate on the boundary collar ----
    {
        double worst = 1e300;
        size_t samples = 0;
        for (int a = 0; a <= 12; ++a) {
            for (int b = 0; b <= 12; ++b) {
                double zv = -1 + 2.0 * a / 12, rsq = 1.0 * b / 12;
                double Kv = K(zv, rsq);
                PiecewiseProfile rho = rho_of(zv, rsq);
                // top-face collar
                for (int k = 0; k <= 8; ++k) {
                    double s = Kv + C - opt.collar + opt.collar * k / 8;
                    worst = std::min(worst, rho.deriv(s));
                    ++samples;
                }
                // side collar: parameters near the boundary of Delta_cyl
                if (keps(rsq) + keps(std::abs(zv)) >= 0.095) {
                    for (int k = 0; k <= 16; ++k) {
                        double s = (Kv + C) * k / 16;
                        worst = std::min(worst, rho.deriv(s));
                        ++samples;
                    }
                }
            }
        }
        Certificate cert;
        cert.kind = CertKind::GridPositive;
        cert.name = "otw/contact-collar";
        cert.tolerance = 0;
        cert.min = worst;
        cert.samples = samples;
        cert.pass = worst > 0;
        nc.certificates.push_back(cert);
        nc.check_grid("contact-near-boundary", cert.pass,
                      "min rho' on the collar = " + std::to_string(worst));
    }

    // ---- D_ot piece records and locus avoidance ----
    {
        double root_pi = std::sqrt(kPi);
        double half = std::sqrt(kPi / 2);
        double g_start = 0.55 * half;
        PiecewiseProfile g = PiecewiseProfile::hermite(
            {{-1.0, g_start, 0.0}, {-1 + eps, root_pi, 0.0}});
        auto g_of = [&](double zv) { return zv <= -1 + eps ? g(zv) : root_pi; };
        bool endpoints = std::abs(g_of(-1 + eps) - root_pi) < 1e-12 &&
                         std::abs(g_of(1 - eps) - root_pi) < 1e-12;
        bool below = g_of(-1.0) < half;
        nc.check_grid("g-profile-endpoints", endpoints && below,
                      "g(-1) = " + std::to_string(g_of(-1.0)));

        // pieces of the disc
        nc.report("piece-1", "graph r = g(z), z in [-1, 1-eps], sum r_i^2 <= g(-1)^2");
        nc.report("piece-2", "side r <= g(z), sum r_i^2 = g(-1)^2");
        nc.report("piece-3", "bottom z = -1, r <= g(-1), sum r_i^2 <= g(-1)^2");

        // locus avoidance: strata need two radial coordinates at
        // sqrt((l+1/2) pi); on every piece the r_i are bounded by g(-1) <
        // sqrt(pi/2), so no second coordinate can reach a stratum radius.
        bool avoid = g_of(-1.0) < half;
        for (int k = 0; k <= 32; ++k) {
            double zv = -1 + (eps)*k / 32;
            avoid = avoid && g_of(zv) <= root_pi + 1e-12;
        }
        nc.check_grid("pieces-avoid-locus", avoid,
                      "r_i <= g(-1) < sqrt(pi/2): at most one coordinate can sit on a stratum");
    }
    return nc;
}

}  // namespace lutzlab
