#ifndef SODLAT_VERIFY_HPP
#define SODLAT_VERIFY_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "sodlat/errors.hpp"

namespace sod {

struct verify_failure : error {
    using error::error;
};

struct verify_item {
    std::string id;
    std::string description;
    std::function<void()> run;  // throws verify_failure on mismatch
};

struct verify_outcome {
    std::string id;
    std::string description;
    bool passed = false;
    std::string message;  // failure detail
};

/* The regression suite: items A01..A13 are the acceptance criteria, B items
 * cover the remaining pinned tables, P items are seeded randomized property
 * checks.  All arithmetic is exact; tolerances are zero. */
std::vector<verify_item> verify_items(std::uint64_t seed);

/* Runs items whose id or description contains `filter` (empty = all). */
std::vector<verify_outcome> run_verify(const std::string& filter, std::uint64_t seed);

bool all_passed(const std::vector<verify_outcome>& outcomes);

}  // namespace sod

#endif
