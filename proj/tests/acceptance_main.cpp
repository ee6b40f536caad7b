/* Acceptance suite: runs every regression item at zero tolerance and prints
 * one pass/fail line per item.  Exit code 0 only if everything passed. */

#include <cstdlib>
#include <iostream>

#include "sodlat/verify.hpp"

int main(int argc, char** argv) {
    std::string filter = argc > 1 ? argv[1] : "";
    std::uint64_t seed = 20240801;
    if (const char* env = std::getenv("SOD_SEED")) seed = std::strtoull(env, nullptr, 10);

    auto outcomes = sod::run_verify(filter, seed);
    if (outcomes.empty()) {
        std::cerr << "no items matched filter '" << filter << "'\n";
        return 2;
    }
    for (const auto& o : outcomes) {
        std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << o.id << "  " << o.description << "\n";
        if (!o.passed) std::cout << "       " << o.message << "\n";
    }
    bool ok = sod::all_passed(outcomes);
    std::cout << (ok ? "acceptance: all items passed" : "acceptance: FAILURES PRESENT") << "\n";
    return ok ? 0 : 1;
}
