#include "addrep/report.hpp"

#include <algorithm>
#include <ostream>

namespace addrep {

std::string to_string(Status s) {
    switch (s) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        case Status::informational:
            return "informational";
        case Status::not_applicable:
            return "not-applicable";
    }
    return "unknown";
}

VerificationReport inequality_report(std::string check_id, std::string variant, nlohmann::json params, double lhs,
                                     double rhs, double err, Claim claim, bool strict) {
    VerificationReport r;
    r.check_id = std::move(check_id);
    r.variant = std::move(variant);
    r.params = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = lhs - rhs;
    r.err = err;
    const bool holds = (strict && err == 0.0) ? r.slack > 0.0 : r.slack >= -err;
    if (holds) {
        r.status = Status::pass;
    } else {
        r.status = claim == Claim::exact ? Status::fail : Status::informational;
    }
    return r;
}

nlohmann::json to_json(const VerificationReport& r) {
    return nlohmann::json{{"check_id", r.check_id}, {"variant", r.variant}, {"params", r.params},
                          {"lhs", r.lhs},           {"rhs", r.rhs},         {"slack", r.slack},
                          {"err", r.err},           {"status", to_string(r.status)}};
}

bool any_fail(std::span<const VerificationReport> reports) {
    return std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.status == Status::fail; });
}

int exit_code(std::span<const VerificationReport> reports) { return any_fail(reports) ? 1 : 0; }

void write_reports_csv(std::ostream& out, std::span<const VerificationReport> reports) {
    out << "check_id,variant,lhs,rhs,slack,err,status\n";
    out.precision(17);
    for (const auto& r : reports) {
        out << r.check_id << ',' << r.variant << ',' << r.lhs << ',' << r.rhs << ',' << r.slack << ',' << r.err << ','
            << to_string(r.status) << '\n';
    }
}

}  // namespace addrep
