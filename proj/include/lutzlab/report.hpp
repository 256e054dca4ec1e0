// report.hpp -- machine-readable verification reports (schema in docs/)
#pragma once

#include "lutzlab/certify.hpp"
#include "lutzlab/constructions.hpp"
#include "lutzlab/surgery.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace lutzlab {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchemaVersion = "1";

using Json = nlohmann::ordered_json;

struct ReportDocument {
    std::string construction;
    uint64_t seed = 42;
    std::map<std::string, double> params;
    Json body;  // full document

    std::string dump() const { return body.dump(2) + "\n"; }
};

Json certificate_json(const Certificate& c);
Json check_json(const CheckEntry& c);
ReportDocument make_report(const NamedConstruction& nc, uint64_t seed,
                           const std::map<std::string, double>& params);
ReportDocument make_trace_report(const Trace& tr, uint64_t seed, int n);

}  // namespace lutzlab
