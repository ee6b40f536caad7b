#ifndef SODLAT_INTMATH_HPP
#define SODLAT_INTMATH_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "sodlat/errors.hpp"

namespace sod {

/* All lattice arithmetic in this library is exact over Z. */
using Int = boost::multiprecision::cpp_int;
using ivec = std::vector<Int>;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

/* floor(sqrt(n)) for n >= 0 */
inline Int isqrt(const Int& n) {
    if (n < 0) throw usage_error("isqrt of negative number");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

inline Int factorial(long long n) {
    Int f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

inline long long to_ll(const Int& a) {
    if (a > Int(INT64_MAX) || a < Int(INT64_MIN))
        throw usage_error("integer too large for 64-bit conversion: " + a.str());
    return static_cast<long long>(a);
}

inline int sign(const Int& a) { return a > 0 ? 1 : (a < 0 ? -1 : 0); }

/* Euler totient, used to enumerate cyclotomic polynomials of bounded degree. */
inline long long totient(long long n) {
    long long result = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace sod

#endif
