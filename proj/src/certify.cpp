#include "lutzlab/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace lutzlab {

namespace {
constexpr double kGridTol = 1e-9;
constexpr double kHotZone = 1e-6;
constexpr double kNullTol = 1e-6;

std::string point_str(const std::vector<double>& p) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < p.size(); ++i) os << (i ? ", " : "") << p[i];
    os << ")";
    return os.str();
}
}  // namespace

// ---------------------------------------------------------------------------
// classify

Classification classify(const DifferentialForm& alpha, const Region& region,
                        std::optional<DifferentialForm> vol) {
    require_same_chart(alpha.chart(), region.chart(), "classify");
    const ChartPtr& chart = alpha.chart();
    int dim = chart->dim();
    if (dim % 2 == 0) throw NotTopDegree("classify needs an odd-dimensional chart");
    int n = (dim - 1) / 2;
    if (alpha.degree() != 1) throw NotTopDegree("classify needs a 1-form");

    // alpha must be nonvanishing on samples (sweep only referenced axes)
    {
        std::vector<CompiledExpr> comps;
        std::vector<bool> slow;
        std::vector<const ScalarExpr*> exprs;
        std::vector<int> axes_set;
        for (const auto& [k, v] : alpha.components()) {
            (void)k;
            comps.emplace_back(v);
            slow.push_back(!comps.back().ok());
            exprs.push_back(&v);
            for (int a : region.active_axes(v))
                if (std::find(axes_set.begin(), axes_set.end(), a) == axes_set.end())
                    axes_set.push_back(a);
        }
        std::sort(axes_set.begin(), axes_set.end());
        // coarse sweep: this is a sanity precondition on alpha, not a
        // certification, and the axis union can be large
        Region coarse = region;
        for (int a : axes_set)
            coarse.with_resolution(a, std::min(5, region.resolution(a)));
        bool vanishes = false;
        std::vector<double> where;
        coarse.for_each_sample(axes_set, [&](const std::vector<double>& p) {
            if (vanishes) return;
            double norm = 0.0;
            try {
                for (size_t c = 0; c < comps.size(); ++c) {
                    double v = slow[c] ? exprs[c]->evaluate(p) : comps[c].evaluate(p);
                    norm += v * v;
                }
            } catch (const DomainPole&) {
                return;
            }
            if (norm < kGridTol * kGridTol) {
                vanishes = true;
                where = p;
            }
        });
        if (vanishes) throw VanishingForm("alpha vanishes at " + point_str(where));
    }

    DifferentialForm volume = vol ? *vol : standard_volume(chart);
    DifferentialForm top = wedge(alpha, wedge_pow(ext_d(alpha), n));
    ScalarExpr ratio = top_ratio(top, volume);

    Classification out;
    out.ratio = ratio;
    GridStats st = region.grid_stats(ratio);
    out.cert.samples = st.samples;
    out.cert.tolerance = kGridTol;
    out.cert.min = st.min;
    out.cert.max = st.max;

    // Negative orientation: uniformly nonpositive with a genuinely negative
    // value somewhere (a contact form for the opposite orientation).
    int orientation = (st.max < kGridTol && st.min < -kGridTol) ? -1 : +1;
    out.orientation = orientation;
    double omin = orientation > 0 ? st.min : -st.max;
    double omax = orientation > 0 ? st.max : -st.min;

    if (omin >= -kGridTol && omax > kGridTol) {
        // off-grid zeros decide Contact vs Confoliation: the non-contact locus
        // is measure-zero and generic grids never hit it exactly
        auto zeros = region.refined_zeros(ratio, kGridTol);
        if (!zeros.empty()) {
            out.cls = ContactClass::Confoliation;
            out.cert.kind = CertKind::GridNonNegative;
            out.cert.pass = true;
            out.cert.name = "classify/confoliation";
            out.cert.zeros = std::move(zeros);
            return out;
        }
        out.cls = ContactClass::Contact;
        out.cert.kind = CertKind::GridPositive;
        out.cert.pass = omin > kGridTol;
        out.cert.name = "classify/contact";
        out.cert.witness = orientation > 0 ? st.argmin : st.argmax;
        return out;
    }
    out.cls = ContactClass::Neither;
    out.cert.kind = CertKind::GridNonNegative;
    out.cert.pass = false;
    out.cert.name = "classify/neither";
    out.cert.witness = orientation > 0 ? st.argmin : st.argmax;
    out.cert.detail = "sign change on grid";
    return out;
}

// ---------------------------------------------------------------------------
// non_contact_locus

LocusReport non_contact_locus(const DifferentialForm& alpha, const Region& region,
                              std::optional<DifferentialForm> vol) {
    LocusReport rep;
    rep.cls = classify(alpha, region, std::move(vol));
    rep.zeros = rep.cls.cert.zeros;  // refined during classification

    // candidate strata: pairs of radial coordinates at sqrt((1/2+l)pi)
    const ChartPtr& chart = region.chart();
    std::vector<int> radial;
    for (int i = 0; i < chart->dim(); ++i)
        if (chart->coord(i).kind == CoordKind::Radial) radial.push_back(i);
    constexpr double kPi = 3.141592653589793238462643;
    for (size_t a = 0; a < radial.size(); ++a) {
        for (size_t b = a + 1; b < radial.size(); ++b) {
            int i = radial[a], j = radial[b];
            auto radii = [&](int coord) {
                std::vector<double> out;
                double hi = region.box()[static_cast<size_t>(coord)].second;
                for (int l = 0;; ++l) {
                    double r = std::sqrt((0.5 + l) * kPi);
                    if (r > hi + 1e-12) break;
                    if (r >= region.box()[static_cast<size_t>(coord)].first - 1e-12)
                        out.push_back(r);
                }
                return out;
            };
            for (double ri : radii(i))
                for (double rj : radii(j)) rep.strata.push_back({i, j, ri, rj});
        }
    }

    auto near_stratum = [&](const LocusPoint& z) {
        for (const Stratum& s : rep.strata) {
            double di = std::abs(z.point[static_cast<size_t>(s.i)] - s.ri);
            double dj = std::abs(z.point[static_cast<size_t>(s.j)] - s.rj);
            if (di <= region.cell_size(s.i) + 1e-12 && dj <= region.cell_size(s.j) + 1e-12)
                return true;
        }
        return false;
    };
    rep.zeros_covered = std::all_of(rep.zeros.begin(), rep.zeros.end(), near_stratum);

    // other direction: every stratum sample (over the free radial coords at
    // grid values) has a refined zero within one cell
    rep.strata_covered = true;
    for (const Stratum& s : rep.strata) {
        std::vector<int> free_radial;
        for (int r : radial)
            if (r != s.i && r != s.j) free_radial.push_back(r);
        bool covered_all = true;
        std::vector<double> probe(static_cast<size_t>(chart->dim()));
        for (int i = 0; i < chart->dim(); ++i) probe[static_cast<size_t>(i)] = region.midpoint(i);
        probe[static_cast<size_t>(s.i)] = s.ri;
        probe[static_cast<size_t>(s.j)] = s.rj;
        std::function<void(size_t)> walk = [&](size_t k) {
            if (!covered_all) return;
            if (k == free_radial.size()) {
                bool near = false;
                for (const LocusPoint& z : rep.zeros) {
                    bool ok = true;
                    for (int r : radial) {
                        double d = std::abs(z.point[static_cast<size_t>(r)] -
                                            probe[static_cast<size_t>(r)]);
                        if (d > region.cell_size(r) + 1e-12) {
                            ok = false;
                            break;
                        }
                    }
                    if (ok) {
                        near = true;
                        break;
                    }
                }
                if (!near) covered_all = false;
                return;
            }
            for (double v : region.axis_samples(free_radial[k])) {
                probe[static_cast<size_t>(free_radial[k])] = v;
                walk(k + 1);
            }
        };
        walk(0);
        if (!covered_all) {
            rep.strata_covered = false;
            break;
        }
    }
    if (rep.strata.empty()) rep.strata_covered = rep.zeros.empty();

    rep.cert.kind = CertKind::GridZeroSet;
    rep.cert.name = "non_contact_locus";
    rep.cert.tolerance = kGridTol;
    rep.cert.zeros = rep.zeros;
    rep.cert.pass = rep.zeros_covered && rep.strata_covered;
    std::ostringstream os;
    os << rep.zeros.size() << " refined zeros, " << rep.strata.size() << " candidate strata";
    rep.cert.detail = os.str();
    return rep;
}

// ---------------------------------------------------------------------------
// tau

DifferentialForm tau(const DifferentialForm& alpha, const DiagonalMetric& g) {
    int dim = alpha.chart()->dim();
    if (dim % 2 == 0 || alpha.degree() != 1) throw NotTopDegree("tau needs a 1-form, odd dim");
    int n = (dim - 1) / 2;
    return hodge_star(wedge(alpha, wedge_pow(ext_d(alpha), n - 1)), g);
}

// ---------------------------------------------------------------------------
// numeric null space (Gaussian elimination on the 2-form matrix)

std::vector<std::vector<double>> null_space_at(const DifferentialForm& two_form,
                                               const std::vector<double>& pt, double tol) {
    int dim = two_form.chart()->dim();
    std::vector<std::vector<double>> m(static_cast<size_t>(dim),
                                       std::vector<double>(static_cast<size_t>(dim), 0.0));
    double scale = 0.0;
    for (const auto& [k, v] : two_form.components()) {
        double c = v.evaluate(pt);
        m[static_cast<size_t>(k[0])][static_cast<size_t>(k[1])] = c;
        m[static_cast<size_t>(k[1])][static_cast<size_t>(k[0])] = -c;
        scale = std::max(scale, std::abs(c));
    }
    // rows of m give constraints sum_b m[a][b] v[b] = 0 (i.e. tau(v, e_a) = 0
    // up to sign); eliminate with a pivot threshold relative to the matrix
    // scale so a uniformly small tau still gets its honest rank
    double pivot_tol = tol * std::max(scale, tol);
    size_t rows = static_cast<size_t>(dim), cols = static_cast<size_t>(dim);
    std::vector<int> pivot_col(rows, -1);
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t best = rank;
        for (size_t r = rank; r < rows; ++r)
            if (std::abs(m[r][c]) > std::abs(m[best][c])) best = r;
        if (std::abs(m[best][c]) <= pivot_tol) continue;
        std::swap(m[rank], m[best]);
        double piv = m[rank][c];
        for (size_t cc = 0; cc < cols; ++cc) m[rank][cc] /= piv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == rank) continue;
            double f = m[r][c];
            if (f == 0.0) continue;
            for (size_t cc = 0; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        pivot_col[rank] = static_cast<int>(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t r = 0; r < rank; ++r) is_pivot[static_cast<size_t>(pivot_col[r])] = true;
    std::vector<std::vector<double>> basis;
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<double> v(cols, 0.0);
        v[c] = 1.0;
        for (size_t r = 0; r < rank; ++r) v[static_cast<size_t>(pivot_col[r])] = -m[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// conductivity

ConductivityReport conductivity_check(const DifferentialForm& alpha, const Region& region,
                                      const VectorField& x, const DiagonalMetric& g,
                                      const std::vector<LocusPoint>& locus) {
    const ChartPtr& chart = alpha.chart();
    int dim = chart->dim();
    int n = (dim - 1) / 2;
    ScalarExpr ratio = top_ratio(wedge(alpha, wedge_pow(ext_d(alpha), n)), standard_volume(chart));
    DifferentialForm t = tau(alpha, g);
    CompiledExpr fast_ratio(ratio);

    std::vector<std::pair<int, CompiledExpr>> flow_comps;
    for (const auto& [i, v] : x.components()) flow_comps.emplace_back(i, CompiledExpr(v));
    auto flow_rhs = [&](const std::vector<double>& p) {
        std::vector<double> dp(static_cast<size_t>(dim), 0.0);
        for (const auto& [i, cv] : flow_comps) dp[static_cast<size_t>(i)] = cv.evaluate(p);
        return dp;
    };

    ConductivityReport rep;
    constexpr double h = 1e-3;
    constexpr size_t max_steps = 10000;
    bool all_ok = true;
    for (const LocusPoint& z : locus) {
        PathRecord pr;
        pr.start = z.point;
        std::vector<double> p = z.point;
        std::vector<std::vector<double>> trail;
        trail.push_back(p);
        size_t step = 0;
        for (; step < max_steps; ++step) {
            double v = fast_ratio.evaluate(p);
            if (v > kHotZone) {
                pr.reached = true;
                break;
            }
            auto k1 = flow_rhs(p);
            std::vector<double> p2 = p, p3 = p, p4 = p;
            for (int i = 0; i < dim; ++i) p2[static_cast<size_t>(i)] += 0.5 * h * k1[static_cast<size_t>(i)];
            auto k2 = flow_rhs(p2);
            for (int i = 0; i < dim; ++i) p3[static_cast<size_t>(i)] += 0.5 * h * k2[static_cast<size_t>(i)];
            auto k3 = flow_rhs(p3);
            for (int i = 0; i < dim; ++i) p4[static_cast<size_t>(i)] += h * k3[static_cast<size_t>(i)];
            auto k4 = flow_rhs(p4);
            for (int i = 0; i < dim; ++i)
                p[static_cast<size_t>(i)] +=
                    h / 6.0 *
                    (k1[static_cast<size_t>(i)] + 2 * k2[static_cast<size_t>(i)] +
                     2 * k3[static_cast<size_t>(i)] + k4[static_cast<size_t>(i)]);
            trail.push_back(p);
            // allow a modest margin beyond the box before declaring escape
            bool inside = true;
            for (int i = 0; i < dim; ++i) {
                if (chart->coord(i).kind == CoordKind::Angle) continue;
                auto [lo, hi] = region.box()[static_cast<size_t>(i)];
                double margin = 0.5 * (hi - lo) + 1e-6;
                double vi = p[static_cast<size_t>(i)];
                if (vi < lo - margin || vi > hi + margin) inside = false;
            }
            if (!inside) throw PathEscapedRegion("at " + point_str(p));
        }
        if (!pr.reached) throw MaxStepsExceeded("from " + point_str(z.point));
        pr.steps = step;
        pr.arrival = p;
        // Null(tau)-orthogonality of X at 16 samples along the trail
        size_t stride = std::max<size_t>(1, trail.size() / 16);
        for (size_t s = 0; s < trail.size(); s += stride) {
            const auto& q = trail[s];
            // on the locus Null(tau)~perp is {0}: nothing to check there, and
            // tau's secondary structure is below numeric resolution anyway
            if (fast_ratio.evaluate(q) <= kGridTol) {
                ++pr.null_skipped;
                continue;
            }
            auto basis = null_space_at(t, q, kNullTol);
            if (static_cast<int>(basis.size()) == dim) {
                ++pr.null_skipped;  // tau vanishes: Null is everything
                continue;
            }
            std::vector<double> xv(static_cast<size_t>(dim), 0.0);
            for (const auto& [i, v] : x.components()) xv[static_cast<size_t>(i)] = v.evaluate(q);
            for (const auto& b : basis) {
                // relative pairing: |g(X, v)| / (|X|_g |v|_g)
                double pair = 0.0, nx = 0.0, nb = 0.0;
                for (int i = 0; i < dim; ++i) {
                    double hi = g.scale(i).evaluate(q);
                    pair += hi * hi * xv[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
                    nx += hi * hi * xv[static_cast<size_t>(i)] * xv[static_cast<size_t>(i)];
                    nb += hi * hi * b[static_cast<size_t>(i)] * b[static_cast<size_t>(i)];
                }
                double denom = std::sqrt(nx * nb);
                if (denom > 0.0)
                    pr.max_pairing = std::max(pr.max_pairing, std::abs(pair) / denom);
            }
            ++pr.null_checks;
        }
        if (pr.max_pairing > kNullTol) all_ok = false;
        rep.paths.push_back(std::move(pr));
    }
    rep.cert.kind = CertKind::PathTrace;
    rep.cert.name = "conductivity";
    rep.cert.tolerance = kHotZone;
    rep.cert.samples = rep.paths.size();
    rep.cert.pass = all_ok;
    double worst = 0.0;
    size_t max_steps_seen = 0;
    for (const auto& p : rep.paths) {
        worst = std::max(worst, p.max_pairing);
        max_steps_seen = std::max(max_steps_seen, p.steps);
    }
    std::ostringstream os;
    os << rep.paths.size() << " paths, max steps " << max_steps_seen
       << ", worst relative X-vs-Null(tau) pairing " << worst;
    rep.cert.detail = os.str();
    return rep;
}

// ---------------------------------------------------------------------------
// characteristic foliation

VectorField char_foliation(const DifferentialForm& beta, const DifferentialForm& omega_volume) {
    require_same_chart(beta.chart(), omega_volume.chart(), "char_foliation");
    const ChartPtr& chart = beta.chart();
    int dim = chart->dim();
    if (omega_volume.degree() != dim) throw NotTopDegree("volume not top degree");
    if (omega_volume.components().size() != 1) throw ZeroVolume("volume must be single component");
    if (beta.degree() != dim - 1) throw NotTopDegree("defining form must have degree dim-1");
    const ScalarExpr& vc = omega_volume.components().begin()->second;

    VectorField v(chart);
    for (int k = 0; k < dim; ++k) {
        IndexTuple key;
        for (int i = 0; i < dim; ++i)
            if (i != k) key.push_back(i);
        ScalarExpr c = beta.component(key);
        if (c.is_symbolic_zero()) continue;
        // i_V (vc dx_0...dx_{dim-1}) on key = (-1)^k V^k vc
        if (k % 2 == 1) c = -c;
        v.set_component(k, c.divided_by_monomial(vc));
    }
    return v;
}

VectorField char_foliation(const DifferentialForm& alpha_ambient, const Restriction& level,
                           const DifferentialForm& omega_on_sub) {
    int dim = alpha_ambient.chart()->dim();
    if (dim % 2 == 0 || alpha_ambient.degree() != 1)
        throw NotTopDegree("char_foliation needs a contact 1-form on an odd chart");
    int n = (dim - 1) / 2;
    DifferentialForm beta =
        restrict_form(wedge(alpha_ambient, wedge_pow(ext_d(alpha_ambient), n - 1)), level);
    return char_foliation(beta, omega_on_sub);
}

// ---------------------------------------------------------------------------
// dividing set

DividingSetReport dividing_set(const DifferentialForm& alpha, const VectorField& x,
                               const Restriction& rest, const Region& region) {
    require_same_chart(alpha.chart(), x.chart(), "dividing_set");
    require_same_chart(rest.subchart, region.chart(), "dividing_set region");
    DividingSetReport rep;
    ScalarExpr ambient = pairing(alpha, x);
    rep.pairing_expr = ambient.substitute(rest.assignment, rest.subchart, rest.index_map);

    // transversality: the X-components along the fixed coordinates must not
    // all vanish at a sample
    std::vector<ScalarExpr> normal_comps;
    for (const auto& [i, c] : rest.assignment) {
        (void)c;
        ScalarExpr comp = x.component(i);
        if (!comp.is_symbolic_zero())
            normal_comps.push_back(comp.substitute(rest.assignment, rest.subchart, rest.index_map));
    }
    size_t tangent = 0, total = 0;
    {
        std::vector<int> axes;
        for (const auto& c : normal_comps)
            for (int a : region.active_axes(c))
                if (std::find(axes.begin(), axes.end(), a) == axes.end()) axes.push_back(a);
        std::sort(axes.begin(), axes.end());
        region.for_each_sample(axes, [&](const std::vector<double>& p) {
            ++total;
            double norm = 0.0;
            for (const auto& c : normal_comps) {
                double v = c.evaluate(p);
                norm = std::max(norm, std::abs(v));
            }
            if (norm <= kGridTol) ++tangent;
        });
    }
    rep.tangent_samples = tangent;
    if (normal_comps.empty() || tangent == total)
        throw NotTransverse("X tangent to the level set at every sample");

    GridStats st = region.grid_stats(rep.pairing_expr);
    size_t pos = 0, neg = 0, zero = 0;
    CompiledExpr fast(rep.pairing_expr);
    region.for_each_sample(region.active_axes(rep.pairing_expr),
                           [&](const std::vector<double>& p) {
                               double v;
                               try {
                                   v = fast.ok() ? fast.evaluate(p)
                                                 : rep.pairing_expr.evaluate(p);
                               } catch (const DomainPole&) {
                                   return;
                               }
                               if (v > kGridTol)
                                   ++pos;
                               else if (v < -kGridTol)
                                   ++neg;
                               else
                                   ++zero;
                           });
    rep.positive_samples = pos;
    rep.negative_samples = neg;
    rep.degenerate = (pos == 0 && neg == 0);
    if (!rep.degenerate) rep.zeros = region.refined_zeros(rep.pairing_expr, kGridTol);

    rep.cert.kind = CertKind::GridZeroSet;
    rep.cert.name = "dividing_set";
    rep.cert.tolerance = kGridTol;
    rep.cert.samples = st.samples;
    rep.cert.min = st.min;
    rep.cert.max = st.max;
    rep.cert.zeros = rep.zeros;
    rep.cert.pass = true;
    std::ostringstream os;
    os << "U+ " << pos << " samples, U- " << neg << " samples"
       << (rep.degenerate ? " (degenerate: pairing identically zero)" : "");
    rep.cert.detail = os.str();
    return rep;
}

// ---------------------------------------------------------------------------
// blend

BlendResult blend(const DifferentialForm& alpha, const DifferentialForm& omega,
                  const ScalarExpr& f, const Region& region) {
    require_same_chart(alpha.chart(), omega.chart(), "blend");
    GridStats st = region.grid_stats(f);
    if (st.min < -1e-9 || st.max > 1.0 + 1e-9)
        throw BadBlendRange("f range [" + std::to_string(st.min) + ", " + std::to_string(st.max) +
                            "]");
    BlendResult out;
    ScalarExpr one_minus = sx_const(f.chart(), 1) - f;
    out.blended = alpha.scaled_expr(one_minus) + omega.scaled_expr(f);
    out.classification = classify(out.blended, region);
    out.range_cert.kind = CertKind::GridNonNegative;
    out.range_cert.name = "blend/range";
    out.range_cert.pass = true;
    out.range_cert.min = st.min;
    out.range_cert.max = st.max;
    out.range_cert.samples = st.samples;
    return out;
}

}  // namespace lutzlab
