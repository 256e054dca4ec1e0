// runner.hpp -- shared verify/plot/trace entry points behind the CLI
#pragma once

#include "lutzlab/plot.hpp"
#include "lutzlab/report.hpp"

#include <optional>
#include <string>

namespace lutzlab {

struct VerifyParams {
    int dim = 2;       // n
    int fold = 1;      // k
    int half_dim = 2;  // m (round handle)
    int index = 1;     // handle index
    int grid = 0;      // 0 = defaults
    uint64_t seed = 42;
};

// Runs the named construction and assembles its report.  Throws
// UnknownConstruction for unknown names.
ReportDocument run_verify(const std::string& construction, const VerifyParams& params);

struct PlotRequest {
    std::string construction;
    VerifyParams params;
    std::vector<std::pair<std::string, double>> fixed;
    std::string axis_x, axis_y;
};
SlicePlot run_plot(const PlotRequest& req);

ReportDocument run_trace(const std::string& recipe, int n, uint64_t seed);

const std::vector<std::string>& known_constructions();

}  // namespace lutzlab
