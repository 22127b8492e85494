#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace addrep {

enum class Status { pass, fail, informational, not_applicable };

std::string to_string(Status s);

// How a failed inequality is classified.
enum class Claim {
    exact,       // stated for every admissible N / Y: violation is a fail
    asymptotic,  // stated for "large enough" N / Y: violation is informational
};

// One check at one scale. slack = lhs - rhs as stored; err is the accumulated
// certified truncation error of lhs and rhs.
struct VerificationReport {
    std::string check_id;
    std::string variant;
    nlohmann::json params = nlohmann::json::object();
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;
    double err = 0.0;
    Status status = Status::informational;
};

// Builds a report for the claim lhs >= rhs (or lhs > rhs with strict).
// pass iff slack >= -err (slack > 0 for strict claims with err = 0); a
// violation becomes fail or informational according to `claim`.
VerificationReport inequality_report(std::string check_id, std::string variant, nlohmann::json params, double lhs,
                                     double rhs, double err, Claim claim, bool strict = false);

nlohmann::json to_json(const VerificationReport& r);

bool any_fail(std::span<const VerificationReport> reports);

// 0 when nothing failed, 1 otherwise.
int exit_code(std::span<const VerificationReport> reports);

// CSV with header `check_id,variant,lhs,rhs,slack,err,status`.
void write_reports_csv(std::ostream& out, std::span<const VerificationReport> reports);

}  // namespace addrep
