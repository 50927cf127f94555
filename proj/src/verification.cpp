#include "restrlab/verification.hpp"

#include <cmath>
#include <limits>

namespace restrlab {

const char* to_string(PassRule rule) {
    switch (rule) {
        case PassRule::absolute: return "abs";
        case PassRule::absolute_or_relative: return "abs_or_rel";
        case PassRule::upper_bound: return "upper_bound";
    }
    return "?";
}

VerificationRecord make_record(std::string name, std::string anchor,
                               std::complex<double> computed,
                               std::complex<double> reference, double tol,
                               PassRule rule, std::string detail) {
    VerificationRecord r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.computed = computed;
    r.reference = reference;
    r.tol = tol;
    r.rule = rule;
    r.detail = std::move(detail);
    const double ref_abs = std::abs(reference);
    if (rule == PassRule::upper_bound) {
        r.abs_err = std::max(0.0, computed.real() - reference.real());
        r.rel_err = ref_abs > 0.0 ? r.abs_err / ref_abs
                                  : (r.abs_err > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
        r.pass = r.abs_err <= tol;
    } else {
        r.abs_err = std::abs(computed - reference);
        r.rel_err = ref_abs > 0.0 ? r.abs_err / ref_abs
                                  : (r.abs_err > 0.0 ? std::numeric_limits<double>::infinity() : 0.0);
        r.pass = (r.abs_err <= tol) ||
                 (rule == PassRule::absolute_or_relative && r.rel_err <= tol);
    }
    return r;
}

VerificationRecord make_error_record(std::string name, std::string anchor,
                                     std::string error_text) {
    VerificationRecord r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.abs_err = std::numeric_limits<double>::infinity();
    r.rel_err = std::numeric_limits<double>::infinity();
    r.pass = false;
    r.detail = std::move(error_text);
    return r;
}

} // namespace restrlab
