#ifndef SODLAT_ERRORS_HPP
#define SODLAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sod {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Caller violated a documented precondition (shape mismatch, bad flag, ...).
 * The CLI maps this to exit code 2. */
struct usage_error : error {
    using error::error;
};

struct non_unimodular_error : error {
    using error::error;
};

struct not_exceptional_error : error {
    using error::error;
};

struct not_bnp_extremal_error : error {
    using error::error;
};

struct not_adherent_error : error {
    using error::error;
};

/* The closed-form dimension table is only proved on a parameter range;
 * outside it we refuse to extrapolate. */
struct unsupported_range_error : error {
    using error::error;
};

struct incomplete_model_error : error {
    using error::error;
};

struct hypothesis_not_met_error : error {
    explicit hypothesis_not_met_error(const std::string& flag_name)
        : error("hypothesis not met: " + flag_name), flag(flag_name) {}
    std::string flag;
};

struct chase_failed_error : error {
    chase_failed_error(const std::string& what, int deg)
        : error(what + " (degree " + std::to_string(deg) + ")"), degree(deg) {}
    int degree;
};

struct internal_error : error {
    using error::error;
};

}  // namespace sod

#endif
