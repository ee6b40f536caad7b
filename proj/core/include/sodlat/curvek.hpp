#ifndef SODLAT_CURVEK_HPP
#define SODLAT_CURVEK_HPP

#include <vector>

#include "sodlat/matrix.hpp"

namespace sod {

/* Class r[O_C] + d[O_x] in the numerical K-group of a smooth curve. */
struct curve_class {
    Int r;  // rank
    Int d;  // degree

    bool operator==(const curve_class&) const = default;
};

inline curve_class structure_class() { return {1, 0}; }
inline curve_class point_class() { return {0, 1}; }
inline curve_class line_bundle_class(const Int& d) { return {1, d}; }
inline curve_class canonical_class(const Int& g) { return {1, 2 * g - 2}; }

/* Ring structure: [O_x]^2 = 0. */
curve_class curve_mul(const curve_class& v, const curve_class& w);
/* [F]^dual: point classes flip sign (O_x^dual = O_x[-1]). */
curve_class curve_dual(const curve_class& v);

/* Riemann-Roch pairing chi(F, F') = r r'(1-g) + (r d' - r' d). */
Int curve_chi(const Int& g, const curve_class& v, const curve_class& w);

/* Class c00 [O x O] + c10 [O_x1 x O] + c01 [O x O_x2] + c11 [O_x1 x O_x2]
 * in the rank-4 subring of the product of two curves spanned by exterior
 * products of structure and point classes. */
struct product_class {
    Int c00, c10, c01, c11;

    bool operator==(const product_class&) const = default;
};

inline product_class product_one() { return {1, 0, 0, 0}; }
/* [I_{(x1,x2)}] = [O x O] - [O_x1 x O_x2] */
inline product_class ideal_point_class() { return {1, 0, 0, -1}; }

product_class box_class(const curve_class& v, const curve_class& w);
/* a^2 = b^2 = 0, a b = [O_x1 x O_x2] for a = [O_x1 x O], b = [O x O_x2]. */
product_class product_mul(const product_class& u, const product_class& v);
product_class product_dual(const product_class& u);

/* Kuenneth Euler functional: chi(1) = (1-g1)(1-g2), chi(a) = 1-g2,
 * chi(b) = 1-g1, chi(ab) = 1. */
Int product_euler(const Int& g1, const Int& g2, const product_class& u);

/* chi(u, v) = euler(dual(u) * v). */
Int product_chi(const Int& g1, const Int& g2, const product_class& u, const product_class& v);

/* Euler pairing of the gluing bimodule attached to a gluing object class:
 * [G](v1, v2) = euler(dual(v1 x 1) * (1 x v2) * urG), tabulated over the
 * given bases of the two factors. */
imat gluing_pairing(const Int& g1, const Int& g2, const product_class& ur_g,
                    const std::vector<curve_class>& basis1,
                    const std::vector<curve_class>& basis2);

/* Point x curve gluing: [G](n, w) = n * chi(O_C, w * urG) on the curve. */
imat augmentation_gluing_pairing(const Int& g, const curve_class& ur_g,
                                 const std::vector<curve_class>& basis2);

/* One entry per ordered factorization g = r * s:
 * h^0 = r, h^1 = s forces degree = r - s + g - 1, and on a general curve
 * in characteristic zero there are deg Gr(r, r+s) such extremal bundles
 * (this count is reported unconditionally). */
struct bnp_entry {
    long long r;
    long long s;
    Int degree;
    Int count;  // deg Gr(r, r+s) = (rs)! * prod_{i<r} i!/(s+i)!
};
std::vector<bnp_entry> bnp_enumerate(long long g);

}  // namespace sod

#endif
