#include "lutzlab/report.hpp"

#include <cmath>
#include <sstream>

namespace lutzlab {

namespace {

// fixed-format doubles keep the report byte-stable across platforms
std::string fmt(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

Json point_json(const std::vector<double>& p) {
    Json a = Json::array();
    for (double v : p) a.push_back(fmt(v));
    return a;
}

std::string kind_str(CertKind k) {
    switch (k) {
        case CertKind::SymbolicIdentity: return "symbolic-identity";
        case CertKind::GridPositive: return "grid-positive";
        case CertKind::GridNonNegative: return "grid-nonnegative";
        case CertKind::GridZeroSet: return "grid-zero-set";
        case CertKind::PathTrace: return "path-trace";
    }
    return "?";
}

}  // namespace

Json certificate_json(const Certificate& c) {
    Json j;
    j["name"] = c.name;
    j["kind"] = kind_str(c.kind);
    j["status"] = c.pass ? "grid-pass" : "fail";
    j["tolerance"] = fmt(c.tolerance);
    j["samples"] = c.samples;
    j["min"] = fmt(c.min);
    j["max"] = fmt(c.max);
    if (!c.witness.empty()) j["witness"] = point_json(c.witness);
    if (!c.zeros.empty()) {
        Json zs = Json::array();
        for (const auto& z : c.zeros) {
            Json e;
            e["point"] = point_json(z.point);
            e["anchor"] = point_json(z.anchor);
            e["value"] = fmt(z.value);
            zs.push_back(e);
        }
        j["zeros"] = zs;
    }
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

Json check_json(const CheckEntry& c) {
    Json j;
    j["name"] = c.name;
    switch (c.status) {
        case CheckEntry::Status::SymbolicPass: j["status"] = "symbolic-pass"; break;
        case CheckEntry::Status::GridPass: j["status"] = "grid-pass"; break;
        case CheckEntry::Status::Reported: j["status"] = "reported"; break;
        default: j["status"] = "fail"; break;
    }
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

ReportDocument make_report(const NamedConstruction& nc, uint64_t seed,
                           const std::map<std::string, double>& params) {
    ReportDocument doc;
    doc.construction = nc.name;
    doc.seed = seed;
    doc.params = params;
    Json j;
    j["tool"] = "lutzlab";
    j["version"] = kToolVersion;
    j["schema"] = kSchemaVersion;
    j["seed"] = seed;
    j["construction"] = nc.name;
    Json pj;
    for (const auto& [k, v] : params) pj[k] = fmt(v);
    j["params"] = pj;
    Json checks = Json::array();
    for (const auto& c : nc.checks) checks.push_back(check_json(c));
    j["checks"] = checks;
    Json certs = Json::array();
    for (const auto& c : nc.certificates) certs.push_back(certificate_json(c));
    j["certificates"] = certs;
    Json forms;
    for (const auto& [name, f] : nc.forms) forms[name] = f.str();
    j["forms"] = forms;
    Json fields;
    for (const auto& [name, f] : nc.fields) fields[name] = f.str();
    if (!nc.fields.empty()) j["vector_fields"] = fields;
    Json scalars;
    for (const auto& [name, s] : nc.scalars) scalars[name] = s.str();
    if (!nc.scalars.empty()) j["scalars"] = scalars;
    j["all_passed"] = nc.all_passed();
    doc.body = j;
    return doc;
}

ReportDocument make_trace_report(const Trace& tr, uint64_t seed, int n) {
    ReportDocument doc;
    doc.construction = "trace/" + tr.recipe;
    doc.seed = seed;
    Json j;
    j["tool"] = "lutzlab";
    j["version"] = kToolVersion;
    j["schema"] = kSchemaVersion;
    j["seed"] = seed;
    j["construction"] = doc.construction;
    Json pj;
    pj["n"] = n;
    j["params"] = pj;
    Json steps = Json::array();
    for (const auto& s : tr.steps) {
        Json e;
        switch (s.kind) {
            case SurgeryStep::Kind::RoundIndex1: e["kind"] = "round-index-1"; break;
            case SurgeryStep::Kind::RoundIndex2n: e["kind"] = "round-index-2n"; break;
            case SurgeryStep::Kind::PushOffIsotropic: e["kind"] = "push-off-isotropic"; break;
            case SurgeryStep::Kind::PushOffTransverse: e["kind"] = "push-off-transverse"; break;
            case SurgeryStep::Kind::XiRoundToConvex: e["kind"] = "xi-round-to-convex"; break;
        }
        e["a"] = s.a;
        if (!s.b.empty()) e["b"] = s.b;
        if (!s.note.empty()) e["operation"] = s.note;
        steps.push_back(e);
    }
    j["steps"] = steps;
    Json log = Json::array();
    for (const auto& line : tr.log) log.push_back(line);
    j["audit_log"] = log;
    Json pieces = Json::array();
    for (const auto& p : tr.final_state.pieces) {
        Json e;
        e["name"] = p.name;
        e["dim"] = p.dim;
        Json tags = Json::array();
        for (const auto& t : p.tags) tags.push_back(t);
        e["tags"] = tags;
        pieces.push_back(e);
    }
    j["final_pieces"] = pieces;
    j["all_passed"] = tr.legal;
    doc.body = j;
    return doc;
}

}  // namespace lutzlab
