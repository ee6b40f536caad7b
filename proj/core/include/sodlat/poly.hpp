#ifndef SODLAT_POLY_HPP
#define SODLAT_POLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "sodlat/intmath.hpp"

namespace sod {

/* Dense univariate polynomial over Z, coefficients in ascending degree order.
 * Normalized: no trailing zero coefficients; the zero polynomial has empty
 * coefficient vector. */
struct ipoly {
    ivec c;

    ipoly() = default;
    explicit ipoly(ivec coeffs) : c(std::move(coeffs)) { trim(); }
    static ipoly constant(const Int& a) { return a == 0 ? ipoly() : ipoly(ivec{a}); }
    /* t - a */
    static ipoly linear(const Int& a) { return ipoly(ivec{-a, 1}); }
    /* t^n - 1 */
    static ipoly t_pow_minus_one(long long n);

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    long long degree() const { return c.empty() ? -1 : static_cast<long long>(c.size()) - 1; }
    const Int& leading() const { return c.back(); }
    bool monic() const { return !c.empty() && c.back() == 1; }
    Int coeff(long long i) const {
        return (i < 0 || i >= static_cast<long long>(c.size())) ? Int(0) : c[i];
    }
    Int eval(const Int& x) const;

    bool operator==(const ipoly& o) const { return c == o.c; }

    std::string to_string(const std::string& var = "t") const;
};

ipoly operator+(const ipoly& a, const ipoly& b);
ipoly operator-(const ipoly& a, const ipoly& b);
ipoly operator*(const ipoly& a, const ipoly& b);

/* Exact division; nullopt if b does not divide a over Z. */
std::optional<ipoly> divide_exact(const ipoly& a, const ipoly& b);

/* The k-th cyclotomic polynomial, computed by the recursive quotient
 * Phi_k = (t^k - 1) / prod_{d | k, d < k} Phi_d. */
ipoly cyclotomic(long long k);

/* Whether p is a product of cyclotomic polynomials, decided by trial
 * division (all roots are then roots of unity). Requires p monic. */
bool is_cyclotomic_product(const ipoly& p);

/* Number of positive / negative real roots of a real-rooted polynomial,
 * counted with multiplicity (Descartes' rule is exact in that case). */
long long positive_real_roots(const ipoly& p);
long long negative_real_roots(const ipoly& p);

}  // namespace sod

#endif
