#include "sodlat/hochschild.hpp"

namespace sod {

graded_dims hh_homology(const family_spec& spec) {
    graded_dims out;
    switch (spec.kind) {
        case family_kind::augmented:
            out.add(1, spec.g);
            out.add(0, 3);
            out.add(-1, spec.g);
            return out;
        case family_kind::ipg:
            out.add(1, spec.g1 + spec.g2);
            out.add(0, 4);
            out.add(-1, spec.g1 + spec.g2);
            return out;
        case family_kind::rpg:
            out.add(1, spec.g1 + spec.g2);
            out.add(0, 3);
            out.add(-1, spec.g1 + spec.g2);
            return out;
        case family_kind::bn_complement:
            out.add(1, spec.g);
            out.add(0, 2);
            out.add(-1, spec.g);
            return out;
    }
    throw usage_error("unknown family kind");
}

graded_dims hh_cohomology(const family_spec& spec) {
    graded_dims out;
    switch (spec.kind) {
        case family_kind::augmented:
            if (spec.g >= 2) {
                out.add(0, 1);
                out.add(-2, 3 * spec.g - 3);
            } else if (spec.g == 1) {
                out.add(0, 1);
                out.add(-1, 1);
                out.add(-2, 1);
            } else {
                out.add(0, 1);
                out.add(-1, 3);
            }
            return out;
        case family_kind::ipg:
            if (spec.g1 < 2 || spec.g2 < 2)
                throw unsupported_range_error(
                    "ipg Hochschild cohomology table needs g1, g2 >= 2");
            out.add(0, 1);
            out.add(-2, 3 * (spec.g1 + spec.g2) - 4);
            out.add(-3, spec.g1 * spec.g2);
            return out;
        case family_kind::rpg:
            if (spec.g1 < 2 || spec.g2 < 2)
                throw unsupported_range_error(
                    "rpg Hochschild cohomology table needs g1, g2 >= 2");
            out.add(0, 1);
            out.add(-2, 3 * (spec.g1 + spec.g2) - 3);
            out.add(-3, spec.g1 * spec.g2);
            out.add(-4, spec.g1 * spec.g2);
            return out;
        case family_kind::bn_complement:
            throw unsupported_range_error(
                "no closed Hochschild cohomology table for BN-modifications; "
                "use hh_bn_modification with explicit complex data");
    }
    throw usage_error("unknown family kind");
}

chase_result hh_gluing_check(const graded_dims& hh1, const graded_dims& hh2,
                             const graded_dims& ext_gg, const graded_dims& connecting_ranks) {
    const graded_dims middle = hh1.plus(hh2);
    int lo = 0, hi = 0;
    for (const graded_dims* t : {&middle, &ext_gg, &connecting_ranks})
        if (!t->empty()) {
            lo = std::min(lo, t->min_degree());
            hi = std::max(hi, t->max_degree());
        }
    for (int s = lo; s <= hi; ++s) {
        long long r = connecting_ranks.at(s);
        if (r > middle.at(s) || r > ext_gg.at(s))
            throw chase_failed_error("connecting rank exceeds adjacent dimensions", -s);
    }
    chase_result out;
    /* in cohomological degree n = -s:
     * HH^n(D) = ker(delta^n) + coker(delta^{n-1}) */
    for (int s = lo - 1; s <= hi; ++s) {
        long long kernel = middle.at(s) - connecting_ranks.at(s);
        long long coker = ext_gg.at(s + 1) - connecting_ranks.at(s + 1);
        out.table.add(s, kernel + coker);
    }
    out.ok = out.table.at(0) == 1;
    return out;
}

graded_dims hh_complement_triangle(const graded_dims& ext_serre_e, const graded_dims& hh_ambient,
                                   const graded_dims& connecting_ranks) {
    int lo = 0, hi = 0;
    for (const graded_dims* t : {&ext_serre_e, &hh_ambient, &connecting_ranks})
        if (!t->empty()) {
            lo = std::min(lo, t->min_degree());
            hi = std::max(hi, t->max_degree());
        }
    for (int s = lo; s <= hi; ++s) {
        long long r = connecting_ranks.at(s);
        if (r > ext_serre_e.at(s) || r > hh_ambient.at(s))
            throw chase_failed_error("connecting rank exceeds adjacent dimensions", -s);
    }
    graded_dims out;
    /* HH^n(complement) = coker(alpha^n) + ker(alpha^{n+1});
     * degree n+1 sits at key s-1 */
    for (int s = lo; s <= hi + 1; ++s) {
        long long coker = hh_ambient.at(s) - connecting_ranks.at(s);
        long long kernel = ext_serre_e.at(s - 1) - connecting_ranks.at(s - 1);
        out.add(s, coker + kernel);
    }
    return out;
}

graded_dims curve_hh_cohomology(long long g) {
    if (g < 2) throw unsupported_range_error("curve cohomology table needs g >= 2");
    graded_dims out;
    out.add(0, 1);
    out.add(-1, g);
    out.add(-2, 3 * g - 3);
    return out;
}

graded_dims ext_ideal_ideal(long long g1, long long g2) {
    graded_dims out;
    out.add(0, 1);
    out.add(-1, g1 + g2 + 2);
    out.add(-2, g1 * g2);
    return out;
}

graded_dims ext_serre_exotic(long long g1, long long g2) {
    graded_dims out;
    out.add(-3, 1);
    out.add(-5, g1 * g2);
    return out;
}

graded_dims ipg_connecting_ranks(long long g1, long long g2) {
    graded_dims out;
    out.add(0, 1);
    out.add(-1, g1 + g2);
    return out;
}

graded_dims rpg_triangle_ranks() { return {}; }

graded_dims hh_bn_modification(long long t0, long long t1, long long t2, long long rank) {
    if (t0 < 0 || t1 < 0 || t2 < 0) throw usage_error("complex dimensions must be nonnegative");
    if (rank < 0 || rank > t1 || rank > t2)
        throw usage_error("map rank exceeds a side of the complex");
    graded_dims out;
    out.add(0, 1);
    out.add(-2, t1 - rank);
    out.add(-3, t2 - rank);
    return out;
}

}  // namespace sod
