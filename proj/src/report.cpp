#include "recenters/report.hpp"

#include <json.hpp>

#include <sstream>

namespace recenters {

bool Report::overall_pass() const {
    for (const auto& r : records)
        if (r.asserted && !r.residual_zero) return false;
    return true;
}

std::string Report::to_json() const {
    nlohmann::ordered_json j;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["command"] = command;
    j["seed"] = seed;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& r : records) {
        nlohmann::ordered_json c;
        c["check"] = r.check;
        c["braiding"] = r.braiding;
        c["birank"] = r.birank;
        c["charge"] = r.charge;
        c["points"] = r.points;
        c["residual_zero"] = r.residual_zero;
        c["residual_norm_terms"] = r.residual_norm_terms;
        c["elapsed_ms"] = r.elapsed_ms;
        c["asserted"] = r.asserted;
        if (!r.note.empty()) c["note"] = r.note;
        j["checks"].push_back(std::move(c));
    }
    j["overall"] = overall_pass() ? "pass" : "fail";
    return j.dump(2) + "\n";
}

std::string Report::to_csv() const {
    std::ostringstream os;
    os << "check,braiding,birank,charge,points,residual_zero,residual_norm_terms,elapsed_ms,asserted\n";
    for (const auto& r : records) {
        std::string pts;
        for (const auto& p : r.points) pts += (pts.empty() ? "" : ";") + p;
        os << r.check << ',' << r.braiding << ',' << r.birank << ',' << r.charge << ',' << pts << ','
           << (r.residual_zero ? "true" : "false") << ',' << r.residual_norm_terms << ','
           << r.elapsed_ms << ',' << (r.asserted ? "true" : "false") << "\n";
    }
    return os.str();
}

}  // namespace recenters
