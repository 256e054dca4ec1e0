// lutzlab -- verify, plot, and trace the twist constructions from the CLI
#include "lutzlab/runner.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

uint64_t default_seed() {
    if (const char* env = std::getenv("LUTZLAB_SEED")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0') return v;
    }
    return 42;
}

int write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write " << path << "\n";
        return 2;
    }
    out << content;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic-numeric verification of higher-dimensional contact twists"};
    app.require_subcommand(1);

    // --- verify ---
    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string construction;
    lutzlab::VerifyParams params;
    params.seed = default_seed();
    std::string out_path;
    verify->add_option("construction", construction, "construction name")->required();
    verify->add_option("--dim", params.dim, "dimension parameter n");
    verify->add_option("--fold", params.fold, "fold count k");
    verify->add_option("--half-dim", params.half_dim, "handle half-dimension m");
    verify->add_option("--index", params.index, "handle index k");
    verify->add_option("--grid", params.grid, "grid resolution override");
    verify->add_option("--seed", params.seed, "RNG seed");
    verify->add_option("--out", out_path, "report output file (JSON)");

    // --- plot ---
    auto* plot = app.add_subcommand("plot", "emit an SVG + CSV coefficient slice");
    std::string plot_construction, fix_spec, axes_spec, plot_out;
    lutzlab::VerifyParams plot_params;
    plot_params.seed = default_seed();
    plot->add_option("construction", plot_construction, "construction name")->required();
    plot->add_option("--dim", plot_params.dim, "dimension parameter n");
    plot->add_option("--seed", plot_params.seed, "RNG seed");
    plot->add_option("--fix", fix_spec, "coord=val,... for the fixed coordinates");
    plot->add_option("--axes", axes_spec, "c1,c2: the two plot axes")->required();
    plot->add_option("--out", plot_out, "SVG output file (CSV next to it)")->required();

    // --- trace ---
    auto* trace = app.add_subcommand("trace", "replay a surgery recipe");
    std::string recipe;
    int trace_dim = 2;
    uint64_t trace_seed = default_seed();
    std::string trace_out;
    trace->add_option("--recipe", recipe, "twist-along-circle | twist-along-hypersurface")
        ->required();
    trace->add_option("--dim", trace_dim, "dimension parameter n");
    trace->add_option("--seed", trace_seed, "RNG seed");
    trace->add_option("--out", trace_out, "report output file (JSON)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage errors exit 2
    }

    try {
        if (verify->parsed()) {
            lutzlab::ReportDocument doc = lutzlab::run_verify(construction, params);
            std::string text = doc.dump();
            if (!out_path.empty()) {
                if (int rc = write_file(out_path, text)) return rc;
            } else {
                std::cout << text;
            }
            bool ok = doc.body.value("all_passed", false);
            if (!ok) std::cerr << "verification failed: " << construction << "\n";
            return ok ? 0 : 1;
        }
        if (plot->parsed()) {
            lutzlab::PlotRequest req;
            req.construction = plot_construction;
            req.params = plot_params;
            // parse --fix coord=val,...
            std::string rest = fix_spec;
            while (!rest.empty()) {
                auto comma = rest.find(',');
                std::string item = rest.substr(0, comma);
                rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
                if (item.empty()) continue;
                auto eq = item.find('=');
                if (eq == std::string::npos) throw lutzlab::BadSlice("bad --fix item " + item);
                req.fixed.push_back({item.substr(0, eq), std::stod(item.substr(eq + 1))});
            }
            auto comma = axes_spec.find(',');
            if (comma == std::string::npos) throw lutzlab::BadSlice("--axes needs c1,c2");
            req.axis_x = axes_spec.substr(0, comma);
            req.axis_y = axes_spec.substr(comma + 1);
            lutzlab::SlicePlot sp = lutzlab::run_plot(req);
            if (int rc = write_file(plot_out, sp.svg)) return rc;
            std::string csv_path = plot_out;
            auto dot = csv_path.rfind('.');
            csv_path = (dot == std::string::npos ? csv_path : csv_path.substr(0, dot)) + ".csv";
            if (int rc = write_file(csv_path, sp.csv)) return rc;
            return 0;
        }
        if (trace->parsed()) {
            lutzlab::ReportDocument doc = lutzlab::run_trace(recipe, trace_dim, trace_seed);
            std::string text = doc.dump();
            if (!trace_out.empty()) {
                if (int rc = write_file(trace_out, text)) return rc;
            } else {
                std::cout << text;
            }
            return doc.body.value("all_passed", false) ? 0 : 1;
        }
    } catch (const lutzlab::UnknownConstruction& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const lutzlab::BadIndex& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const lutzlab::BadSlice& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const lutzlab::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    return 2;
}
