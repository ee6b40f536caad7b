#ifndef SODLAT_BNCLASSIFY_HPP
#define SODLAT_BNCLASSIFY_HPP

#include <string>
#include <vector>

#include "sodlat/families.hpp"

namespace sod {

/* p x^2 + q xy + r y^2 over Z. */
struct bin_quad_form {
    Int p, q, r;

    Int disc() const { return q * q - 4 * p * r; }
    bool is_zero() const { return p == 0 && q == 0 && r == 0; }
    Int content() const;
    /* value on (x, y) */
    Int eval(const Int& x, const Int& y) const;
    /* form after the substitution (x, y) -> (a x + b y, c x + d y) */
    bin_quad_form substituted(const Int& a, const Int& b, const Int& c, const Int& d) const;

    bool operator==(const bin_quad_form&) const = default;
    std::string to_string() const;
};

/* GL2(Z)-equivalence of integer binary quadratic forms, decided exactly:
 * definite forms by Gaussian reduction, indefinite forms of nonsquare
 * discriminant by the reduction cycle, square discriminants by isotropic
 * line normalization, and degenerate forms c*(ux+vy)^2 by the invariant c. */
bool form_equivalent(const bin_quad_form& f1, const bin_quad_form& f2);

/* Quadratic form v -> chi(v, v) of a rank-2 lattice. */
bin_quad_form symmetrized_form(const euler_lattice& l);

/* Symmetrized Euler form of the numerical K-group of a genus-g curve,
 * restricted to its rank-2 presentation: (1-g) r^2. */
bin_quad_form curve_symmetrized_form(long long g);

struct bn_classification_entry {
    long long h0 = 0, h1 = 0;
    bin_quad_form symmetrized;  // equals -b x^2 + ab xy - a y^2, a = h0-1, b = h1-1
    Int disc;                   // = ab(ab - 4)
    bool curve_equivalent = false;
    std::string verdict;
};

/* One entry per ordered factorization g = h0 * h1: the symmetrized Euler
 * form of the BN-complement, its discriminant, and whether the form is
 * GL2(Z)-equivalent to the symmetrized form of a genus-g curve.  That
 * happens exactly for h0 = 1 or h1 = 1; every other complement is
 * numerically distinguishable from the derived category of a curve. */
std::vector<bn_classification_entry> classify_bn(long long g);

}  // namespace sod

#endif
