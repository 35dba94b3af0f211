#include "dpois/report.hpp"

namespace dpois {

nlohmann::ordered_json to_json(const Value& v) {
    if (v.is_exact()) return v.exact().to_string();
    nlohmann::ordered_json out;
    out["lo"] = v.lo().to_string();
    out["hi"] = v.hi().to_string();
    return out;
}

nlohmann::ordered_json to_json(const SuiteReport& report) {
    nlohmann::ordered_json out;
    out["suite"] = report.suite;
    out["seed"] = report.seed;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json j;
        j["id"] = c.identity_id;
        j["lambda"] = c.lambda.to_string();
        j["alpha"] = c.alpha.to_string();
        j["n"] = c.n;
        j["lhs"] = to_json(c.lhs);
        j["rhs"] = to_json(c.rhs);
        j["method"] = std::string(to_string(c.method));
        j["pass"] = c.pass;
        j["detail"] = c.detail;
        checks.push_back(std::move(j));
    }
    out["checks"] = std::move(checks);
    out["summary"]["total"] = report.checks.size();
    out["summary"]["failed"] = report.failed();
    out["summary"]["verdict"] = report.verdict();
    return out;
}

}  // namespace dpois
