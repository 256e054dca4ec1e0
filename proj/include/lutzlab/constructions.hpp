// constructions.hpp -- factories and verifiers for the named twist objects:
// standard tubes, the twisted confoliation and its line version, the bLob
// family, doubles and model tubes, Euler sections, the full-twist homotopy,
// Giroux domains, the pre-Lagrangian blow-up form and the overtwisted-disc
// model.
#pragma once

#include "lutzlab/certify.hpp"
#include "lutzlab/profiles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lutzlab {

struct CheckEntry {
    std::string name;
    enum class Status { SymbolicPass, GridPass, Fail, Reported } status = Status::Fail;
    std::string detail;
};

struct NamedConstruction {
    std::string name;
    ChartPtr chart;
    std::map<std::string, DifferentialForm> forms;
    std::map<std::string, VectorField> fields;
    std::map<std::string, ScalarExpr> scalars;
    std::vector<CheckEntry> checks;
    std::vector<Certificate> certificates;

    bool all_passed() const;
    void check_symbolic(const std::string& name, bool ok, const std::string& detail = "");
    void check_grid(const std::string& name, bool ok, const std::string& detail = "");
    void report(const std::string& name, const std::string& detail);
};

// omega_tw on the cylinder chart (or the z-line chart).
DifferentialForm twist_form(const ChartPtr& chart);
// The bracket of the volume coefficient: prod cos^2 + sum_i sin_i^2 prod_{j!=i} cos^2,
// in canonical form (equals prod-free expansion after the Pythagorean collapse).
ScalarExpr twist_bracket(const ChartPtr& chart);
// xi_0 = dphi + sum r_i^2 dth_i.
DifferentialForm standard_contact_form(const ChartPtr& chart);

// --- operations of the constructions module ---

NamedConstruction make_standard_tube(int n);
NamedConstruction make_lutz_confoliation(int n, bool line_core = false);
NamedConstruction verify_blob(int n);
NamedConstruction build_double_and_tube(int n, int fold);
NamedConstruction euler_sections(int n);

// Curve family for the twist homotopy: per index i and time t, the pair
// (g_i^t, f_i^t) of radial profiles on [0, 1].  The default family keeps the
// curves on the unit circle with per-index speed offsets.
struct CurveFamily {
    std::function<PiecewiseProfile(int i, double t)> g;
    std::function<PiecewiseProfile(int i, double t)> f;
};

struct FullTwistOptions {
    int t_samples = 21;
    int r_samples = 25;
    std::optional<double> amplitude;   // fixed A; otherwise doubling search
    std::optional<CurveFamily> curves; // custom (g_i^t, f_i^t); default circle family
};
NamedConstruction full_twist_homotopy(int n, const FullTwistOptions& opt = {});

NamedConstruction giroux_domain(int n);
NamedConstruction prelag_blowup_check(int n);

struct OtwOptions {
    double eps = 0.1;
    double C = 2.0;
    double collar = 0.05;
};
NamedConstruction otw_disc_model(int n, const OtwOptions& opt = {});

}  // namespace lutzlab
