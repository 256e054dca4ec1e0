#include "lutzlab/surgery.hpp"

#include <algorithm>
#include <sstream>

namespace lutzlab {

const Feature* PieceDescriptor::find(const std::string& fname) const {
    for (const auto& f : features)
        if (f.name == fname) return &f;
    return nullptr;
}

bool PieceDescriptor::has_tag(const std::string& tag) const {
    return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

namespace {

struct Located {
    size_t piece;
    const Feature* feature;
};

Located locate(const TraceState& st, const std::string& name, const char* what) {
    for (size_t i = 0; i < st.pieces.size(); ++i)
        if (const Feature* f = st.pieces[i].find(name)) return {i, f};
    throw IllegalStep(std::string(what) + ": feature " + name + " not present");
}

void erase_feature(PieceDescriptor& p, const std::string& name) {
    p.features.erase(std::remove_if(p.features.begin(), p.features.end(),
                                    [&](const Feature& f) { return f.name == name; }),
                     p.features.end());
}

}  // namespace

TraceState apply_step(const TraceState& state, const SurgeryStep& step) {
    TraceState st = state;
    std::ostringstream log;
    switch (step.kind) {
        case SurgeryStep::Kind::PushOffIsotropic: {
            Located src = locate(st, step.a, "isotropic push-off");
            if (src.feature->kind != Feature::Kind::TransverseCircle)
                throw IllegalStep("isotropic push-off needs a transverse circle");
            Feature f;
            f.kind = Feature::Kind::IsotropicCircle;
            f.name = step.b;
            f.framing = "csn(" + step.a + ")";
            st.pieces[src.piece].features.push_back(f);
            log << (step.note.empty() ? "push-off" : step.note) << ": isotropic push-off "
                << step.b << " of the transverse circle " << step.a;
            break;
        }
        case SurgeryStep::Kind::PushOffTransverse: {
            Located src = locate(st, step.a, "transverse push-off");
            if (src.feature->kind != Feature::Kind::IsotropicCircle)
                throw IllegalStep("transverse push-off needs an isotropic circle");
            Feature f;
            f.kind = Feature::Kind::TransverseCircle;
            f.name = step.b;
            st.pieces[src.piece].features.push_back(f);
            log << (step.note.empty() ? "push-off" : step.note) << ": transverse push-off "
                << step.b << " of the isotropic circle " << step.a;
            break;
        }
        case SurgeryStep::Kind::RoundIndex1: {
            Located a = locate(st, step.a, "round surgery of index 1");
            Located b = locate(st, step.b, "round surgery of index 1");
            if (a.feature->kind != Feature::Kind::IsotropicCircle ||
                b.feature->kind != Feature::Kind::IsotropicCircle)
                throw IllegalStep("index-1 surgery needs two isotropic circles");
            if (a.feature == b.feature)
                throw IllegalStep("index-1 surgery needs two disjoint circles");
            if (a.feature->framing.empty() || b.feature->framing.empty())
                throw IllegalStep("index-1 surgery needs framed circles");
            // removal of the two standard tubular neighborhoods, regluing of
            // the belt region: distinct pieces merge into one
            if (a.piece != b.piece) {
                PieceDescriptor merged;
                const PieceDescriptor& pa = st.pieces[a.piece];
                const PieceDescriptor& pb = st.pieces[b.piece];
                merged.name = pa.name + "#" + pb.name;
                merged.dim = pa.dim;
                if (pb.dim != pa.dim) throw IllegalStep("dimension mismatch in index-1 surgery");
                merged.boundary = pa.boundary;
                merged.boundary.insert(merged.boundary.end(), pb.boundary.begin(),
                                       pb.boundary.end());
                merged.features = pa.features;
                merged.features.insert(merged.features.end(), pb.features.begin(),
                                       pb.features.end());
                merged.tags = pa.tags;
                merged.tags.insert(merged.tags.end(), pb.tags.begin(), pb.tags.end());
                erase_feature(merged, step.a);
                erase_feature(merged, step.b);
                size_t hi = std::max(a.piece, b.piece), lo = std::min(a.piece, b.piece);
                st.pieces.erase(st.pieces.begin() + static_cast<long>(hi));
                st.pieces.erase(st.pieces.begin() + static_cast<long>(lo));
                st.pieces.push_back(std::move(merged));
            } else {
                erase_feature(st.pieces[a.piece], step.a);
                erase_feature(st.pieces[a.piece], step.b);
            }
            log << (step.note.empty() ? "surgery" : step.note)
                << ": contact round surgery of index 1 along " << step.a << ", " << step.b
                << " (framings " << "csn-labelled" << ")";
            break;
        }
        case SurgeryStep::Kind::XiRoundToConvex: {
            Located a = locate(st, step.a, "xi-round perturbation");
            if (a.feature->kind != Feature::Kind::XiRoundHypersurface)
                throw IllegalStep("perturbation needs a xi-round hypersurface");
            PieceDescriptor& p = st.pieces[a.piece];
            for (auto& f : p.features) {
                if (f.name == step.a) {
                    f.kind = Feature::Kind::ConvexHypersurface;
                    f.dividing_set = "S^{2n-2}xS^1";
                }
            }
            log << (step.note.empty() ? "perturbation" : step.note)
                << ": xi-round hypersurface " << step.a
                << " perturbed to a convex hypersurface with dividing set S^{2n-2}xS^1";
            break;
        }
        case SurgeryStep::Kind::RoundIndex2n: {
            Located a = locate(st, step.a, "round surgery of index 2n");
            if (a.feature->kind != Feature::Kind::ConvexHypersurface)
                throw IllegalStep("index-2n surgery needs a convex hypersurface");
            if (a.feature->dividing_set != "S^{2n-2}xS^1")
                throw IllegalStep("index-2n surgery needs the S^{2n-2}xS^1 dividing set");
            PieceDescriptor& p = st.pieces[a.piece];
            erase_feature(p, step.a);
            // removal of the invariant tubular neighborhood, attachment of two
            // solid tubes: the section closes up and the core isotropic
            // circles appear as new features
            Feature l1, l2;
            l1.kind = l2.kind = Feature::Kind::IsotropicCircle;
            l1.name = step.a + ".core1";
            l2.name = step.a + ".core2";
            l1.framing = l2.framing = "csn(" + step.a + ")";
            p.features.push_back(l1);
            p.features.push_back(l2);
            // boundary components modelled on the hypersurface are capped
            p.boundary.erase(std::remove(p.boundary.begin(), p.boundary.end(),
                                         BoundaryModel::XiRoundSphereTimesCircle),
                             p.boundary.end());
            log << (step.note.empty() ? "surgery" : step.note)
                << ": contact round surgery of index 2n along " << step.a
                << "; glued two solid tubes with isotropic cores " << l1.name << ", " << l2.name;
            break;
        }
    }
    st.log.push_back(log.str());
    return st;
}

Trace run_recipe(const std::string& name, int n) {
    if (n < 1) throw BadIndex("recipe needs n >= 1");
    Trace tr;
    tr.recipe = name;
    int dim = 2 * n + 1;

    if (name == "twist-along-circle") {
        // pieces: the ambient manifold with a transverse circle, and the
        // model pi-Lutz tube with its transverse core
        TraceState st;
        PieceDescriptor M{"M", dim, {}, {{Feature::Kind::TransverseCircle, "gamma", "", ""}}, {}};
        PieceDescriptor tube{"mlt",
                             dim,
                             {BoundaryModel::XiRoundSphereTimesCircle},
                             {{Feature::Kind::TransverseCircle, "Gamma", "", ""},
                              {Feature::Kind::XiRoundHypersurface, "bdry", "", ""}},
                             {"blob-family"}};
        st.pieces = {M, tube};
        tr.steps = {
            {SurgeryStep::Kind::PushOffIsotropic, "gamma", "L(gamma)", "Operation 1"},
            {SurgeryStep::Kind::PushOffIsotropic, "Gamma", "L(Gamma)", "Operation 1"},
            {SurgeryStep::Kind::RoundIndex1, "L(gamma)", "L(Gamma)", "Operation 1"},
            {SurgeryStep::Kind::XiRoundToConvex, "bdry", "", "Operation 2"},
            {SurgeryStep::Kind::RoundIndex2n, "bdry", "", "Operation 2"},
        };
        for (const auto& s : tr.steps) st = apply_step(st, s);
        st.log.push_back("framing choice: index-2n surgery framed to recover the double; "
                         "index-1 framed so the ambient manifold is unchanged (recorded "
                         "as an assumption, no framing calculus)");
        if (st.pieces.size() == 1) st.pieces[0].tags.push_back("model-pi-lutz-tube");
        tr.final_state = st;
        tr.log = st.log;
        tr.legal = true;
        return tr;
    }
    if (name == "twist-along-hypersurface") {
        TraceState st;
        PieceDescriptor M{"M",
                          dim,
                          {},
                          {{Feature::Kind::XiRoundHypersurface, "H", "", ""}},
                          {}};
        // the double, used in place of the blow-down step (Remark reading)
        PieceDescriptor dbl{"double",
                            dim,
                            {},
                            {{Feature::Kind::TransverseCircle, "l1", "", ""},
                             {Feature::Kind::TransverseCircle, "l2", "", ""}},
                            {"blob-family", "giroux-domain"}};
        st.pieces = {M, dbl};
        tr.steps = {
            {SurgeryStep::Kind::XiRoundToConvex, "H", "", "Operation 1"},
            {SurgeryStep::Kind::RoundIndex2n, "H", "", "Operation 1"},
            {SurgeryStep::Kind::PushOffIsotropic, "l1", "~l1", "Operation 2"},
            {SurgeryStep::Kind::RoundIndex1, "H.core1", "~l1", "Operation 2"},
            {SurgeryStep::Kind::PushOffIsotropic, "l2", "~l2", "Operation 3"},
            {SurgeryStep::Kind::RoundIndex1, "~l2", "H.core2", "Operation 3"},
        };
        for (const auto& s : tr.steps) st = apply_step(st, s);
        st.log.push_back("framing choice: CSN(~l2) trivialization taken to correspond to "
                         "CSN(L1) (recorded as an assumption, no framing calculus)");
        if (st.pieces.size() == 1) st.pieces[0].tags.push_back("wide-giroux-domain");
        tr.final_state = st;
        tr.log = st.log;
        tr.legal = true;
        return tr;
    }
    if (name == "empty") {
        TraceState st;
        PieceDescriptor M{"M", dim, {}, {}, {}};
        st.pieces = {M};
        tr.final_state = st;
        tr.legal = true;
        return tr;
    }
    throw UnknownConstruction("recipe " + name);
}

}  // namespace lutzlab
