// surgery.hpp -- validated bookkeeping for contact round surgery sequences
#pragma once

#include "lutzlab/errors.hpp"

#include <string>
#include <vector>

namespace lutzlab {

enum class BoundaryModel { ConvexSphereTimesCircle, XiRoundSphereTimesCircle, Closed };

struct Feature {
    enum class Kind {
        IsotropicCircle,
        TransverseCircle,
        PreLagrangianTorus,
        ConvexHypersurface,
        XiRoundHypersurface
    } kind;
    std::string name;
    std::string framing;       // opaque CSN trivialization label (circles)
    std::string dividing_set;  // "S^{2n-2}xS^1" tag (convex hypersurfaces)
};

struct PieceDescriptor {
    std::string name;
    int dim = 0;  // 2n+1
    std::vector<BoundaryModel> boundary;
    std::vector<Feature> features;
    std::vector<std::string> tags;  // inserted-object markers

    const Feature* find(const std::string& fname) const;
    bool has_tag(const std::string& tag) const;
};

struct SurgeryStep {
    enum class Kind {
        RoundIndex1,
        RoundIndex2n,
        PushOffIsotropic,
        PushOffTransverse,
        XiRoundToConvex
    } kind;
    // RoundIndex1: a, b are the two isotropic circles (possibly in two pieces)
    // RoundIndex2n: a is the convex hypersurface
    // push-offs: a is the source circle; b names the new circle
    // XiRoundToConvex: a is the xi-round hypersurface
    std::string a, b;
    std::string note;  // audit-log label, e.g. "Operation 1"
};

struct TraceState {
    std::vector<PieceDescriptor> pieces;
    std::vector<std::string> log;
};

// OP apply_step: deterministic rewrite with legality checks; throws
// IllegalStep naming the violated precondition.
TraceState apply_step(const TraceState& state, const SurgeryStep& step);

// OP run_recipe
struct Trace {
    std::string recipe;
    TraceState final_state;
    std::vector<SurgeryStep> steps;
    std::vector<std::string> log;
    bool legal = true;
};
Trace run_recipe(const std::string& name, int n);

}  // namespace lutzlab
