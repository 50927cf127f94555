#pragma once

#include <complex>
#include <string>

namespace restrlab {

// How a record's pass flag is derived from its errors.
enum class PassRule {
    absolute,              // abs_err <= tol
    absolute_or_relative,  // abs_err <= tol or rel_err <= tol, whichever is looser
    upper_bound,           // computed must not exceed reference by more than tol
};

const char* to_string(PassRule rule);

// One checked identity: what was computed, what it should be, and whether
// the discrepancy is inside the stated tolerance.
struct VerificationRecord {
    std::string name;    // instance label, e.g. "kernel mass n=2 s=0.25"
    std::string anchor;  // registry id of the identity family
    std::complex<double> computed{};
    std::complex<double> reference{};
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    PassRule rule = PassRule::absolute_or_relative;
    bool pass = false;
    std::string detail;  // free-form notes or the error text of a failed check
};

VerificationRecord make_record(std::string name, std::string anchor,
                               std::complex<double> computed,
                               std::complex<double> reference, double tol,
                               PassRule rule = PassRule::absolute_or_relative,
                               std::string detail = {});

// Failed-by-exception record (value fields zeroed, pass = false).
VerificationRecord make_error_record(std::string name, std::string anchor,
                                     std::string error_text);

} // namespace restrlab
