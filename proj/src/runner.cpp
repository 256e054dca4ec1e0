#include "lutzlab/runner.hpp"

#include "lutzlab/handles.hpp"

#include <cmath>

namespace lutzlab {

namespace {
constexpr double kPi = 3.141592653589793238462643;
}

const std::vector<std::string>& known_constructions() {
    static const std::vector<std::string> names = {
        "standard-tube", "lutz-confoliation", "lutz-confoliation-line", "blob",
        "double",        "euler-sections",    "full-twist",             "giroux-domain",
        "prelag-blowup", "otw-disc",          "round-handle"};
    return names;
}

ReportDocument run_verify(const std::string& construction, const VerifyParams& p) {
    if (p.dim < 1) throw UnknownConstruction("dim must be >= 1");
    std::map<std::string, double> params{{"n", static_cast<double>(p.dim)},
                                         {"seed", static_cast<double>(p.seed)}};
    NamedConstruction nc;
    if (construction == "standard-tube") {
        nc = make_standard_tube(p.dim);
    } else if (construction == "lutz-confoliation") {
        nc = make_lutz_confoliation(p.dim);
    } else if (construction == "lutz-confoliation-line") {
        nc = make_lutz_confoliation(p.dim, true);
    } else if (construction == "blob") {
        nc = verify_blob(p.dim);
    } else if (construction == "double") {
        params["fold"] = p.fold;
        nc = build_double_and_tube(p.dim, p.fold);
    } else if (construction == "euler-sections") {
        nc = euler_sections(p.dim);
    } else if (construction == "full-twist") {
        FullTwistOptions opt;
        if (p.grid > 0) opt.r_samples = p.grid;
        nc = full_twist_homotopy(p.dim, opt);
    } else if (construction == "giroux-domain") {
        nc = giroux_domain(p.dim);
    } else if (construction == "prelag-blowup") {
        nc = prelag_blowup_check(p.dim);
    } else if (construction == "otw-disc") {
        nc = otw_disc_model(p.dim);
        params["eps"] = 0.1;
        params["C"] = 2.0;
    } else if (construction == "round-handle") {
        params["m"] = p.half_dim;
        params["k"] = p.index;
        params["A"] = 2.0;
        params["B"] = 1.0;
        params["c"] = 1.0;
        nc = round_handle_construction(p.half_dim, p.index);
    } else {
        std::string names;
        for (const auto& n : known_constructions()) names += (names.empty() ? "" : ", ") + n;
        throw UnknownConstruction(construction + " (known: " + names + ")");
    }
    return make_report(nc, p.seed, params);
}

SlicePlot run_plot(const PlotRequest& req) {
    // slice plots run off the classification coefficient of the construction
    ChartPtr chart;
    ScalarExpr coeff;
    Region* region_ptr = nullptr;
    std::optional<Region> region;
    int n = req.params.dim;
    if (req.construction == "lutz-confoliation" || req.construction == "standard-tube") {
        chart = Chart::cylinder(n);
        DifferentialForm alpha = req.construction == "standard-tube"
                                     ? standard_contact_form(chart)
                                     : twist_form(chart);
        std::vector<std::pair<double, double>> box;
        for (int i = 0; i < chart->dim(); ++i) {
            if (chart->coord(i).kind == CoordKind::Angle)
                box.push_back({0.0, 2 * kPi});
            else
                box.push_back({0.0, std::sqrt(kPi)});
        }
        region.emplace(chart, std::move(box), req.params.seed);
        DifferentialForm top = wedge(alpha, wedge_pow(ext_d(alpha), n));
        coeff = top_ratio(top, standard_volume(chart));
    } else if (req.construction == "giroux-domain") {
        chart = Chart::giroux(n);
        NamedConstruction nc = giroux_domain(n);
        coeff = nc.scalars.at("det");
        std::vector<std::pair<double, double>> box;
        for (int i = 0; i < chart->dim(); ++i) {
            if (chart->coord(i).kind == CoordKind::BoundedLinear)
                box.push_back({-kPi / 2 + 1e-3, kPi / 2 - 1e-3});
            else
                box.push_back({0.0, 2 * kPi});
        }
        region.emplace(chart, std::move(box), req.params.seed);
    } else {
        throw UnknownConstruction("plot target " + req.construction);
    }
    region_ptr = &*region;

    SliceSpec spec;
    for (const auto& [name, value] : req.fixed) {
        int i = chart->index(name);
        if (i < 0) throw BadSlice("unknown coordinate " + name);
        spec.fixed[i] = value;
    }
    spec.axis_x = chart->index(req.axis_x);
    spec.axis_y = chart->index(req.axis_y);
    if (spec.axis_x < 0 || spec.axis_y < 0) throw BadSlice("unknown axis");
    // default any unfixed non-axis coordinate to the box midpoint
    for (int i = 0; i < chart->dim(); ++i) {
        if (i == spec.axis_x || i == spec.axis_y) continue;
        if (!spec.fixed.count(i)) spec.fixed[i] = region_ptr->midpoint(i);
    }
    return plot_slice(coeff, *region_ptr, spec);
}

ReportDocument run_trace(const std::string& recipe, int n, uint64_t seed) {
    Trace tr = run_recipe(recipe, n);
    return make_trace_report(tr, seed, n);
}

}  // namespace lutzlab
