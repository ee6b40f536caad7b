#include "sodlat/curvek.hpp"

namespace sod {

curve_class curve_mul(const curve_class& v, const curve_class& w) {
    return {v.r * w.r, v.r * w.d + v.d * w.r};
}

curve_class curve_dual(const curve_class& v) { return {v.r, -v.d}; }

Int curve_chi(const Int& g, const curve_class& v, const curve_class& w) {
    return v.r * w.r * (1 - g) + (v.r * w.d - w.r * v.d);
}

product_class box_class(const curve_class& v, const curve_class& w) {
    return {v.r * w.r, v.d * w.r, v.r * w.d, v.d * w.d};
}

product_class product_mul(const product_class& u, const product_class& v) {
    return {u.c00 * v.c00,
            u.c00 * v.c10 + u.c10 * v.c00,
            u.c00 * v.c01 + u.c01 * v.c00,
            u.c00 * v.c11 + u.c11 * v.c00 + u.c10 * v.c01 + u.c01 * v.c10};
}

product_class product_dual(const product_class& u) { return {u.c00, -u.c10, -u.c01, u.c11}; }

Int product_euler(const Int& g1, const Int& g2, const product_class& u) {
    return u.c00 * (1 - g1) * (1 - g2) + u.c10 * (1 - g2) + u.c01 * (1 - g1) + u.c11;
}

Int product_chi(const Int& g1, const Int& g2, const product_class& u, const product_class& v) {
    return product_euler(g1, g2, product_mul(product_dual(u), v));
}

imat gluing_pairing(const Int& g1, const Int& g2, const product_class& ur_g,
                    const std::vector<curve_class>& basis1,
                    const std::vector<curve_class>& basis2) {
    imat out(static_cast<long long>(basis1.size()), static_cast<long long>(basis2.size()));
    for (size_t i = 0; i < basis1.size(); ++i)
        for (size_t j = 0; j < basis2.size(); ++j) {
            product_class left = product_dual(box_class(basis1[i], structure_class()));
            product_class right = box_class(structure_class(), basis2[j]);
            out(static_cast<long long>(i), static_cast<long long>(j)) =
                product_euler(g1, g2, product_mul(product_mul(left, right), ur_g));
        }
    return out;
}

imat augmentation_gluing_pairing(const Int& g, const curve_class& ur_g,
                                 const std::vector<curve_class>& basis2) {
    imat out(1, static_cast<long long>(basis2.size()));
    for (size_t j = 0; j < basis2.size(); ++j)
        out(0, static_cast<long long>(j)) =
            curve_chi(g, structure_class(), curve_mul(basis2[j], ur_g));
    return out;
}

std::vector<bnp_entry> bnp_enumerate(long long g) {
    if (g < 0) throw usage_error("genus must be nonnegative");
    std::vector<bnp_entry> out;
    for (long long r = 1; r <= g; ++r) {
        if (g % r != 0) continue;
        long long s = g / r;
        bnp_entry e;
        e.r = r;
        e.s = s;
        e.degree = Int(r) - s + g - 1;
        Int num = factorial(r * s);
        Int den = 1;
        for (long long i = 0; i < r; ++i) {
            num *= factorial(i);
            den *= factorial(s + i);
        }
        if (num % den != 0) throw internal_error("Grassmannian degree not integral");
        e.count = num / den;
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace sod
