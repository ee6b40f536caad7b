#ifndef SODLAT_HOCHSCHILD_HPP
#define SODLAT_HOCHSCHILD_HPP

#include "sodlat/families.hpp"
#include "sodlat/graded.hpp"

namespace sod {

/* Hochschild tables are keyed by shift: a summand k^d[s] contributes d at
 * key s, so cohomology in degree n sits at key -n. */

/* augmented: {1:g, 0:3, -1:g};  ipg: {1:g1+g2, 0:4, -1:g1+g2};
 * rpg: {1:g1+g2, 0:3, -1:g1+g2};  bncomp: {1:g, 0:2, -1:g}. */
graded_dims hh_homology(const family_spec& spec);

/* augmented: {0:1, -2:3g-3} for g >= 2, with the degenerate tables
 * {0:1,-1:1,-2:1} at g = 1 and {0:1,-1:3} at g = 0;
 * ipg: {0:1, -2:3(g1+g2)-4, -3:g1g2} and
 * rpg: {0:1, -2:3(g1+g2)-3, -3:g1g2, -4:g1g2}, both proved only for
 * g1, g2 >= 2 -- outside that range unsupported_range_error is raised
 * rather than extrapolating. */
graded_dims hh_cohomology(const family_spec& spec);

struct chase_result {
    graded_dims table;
    /* the reconstructed table is consistent and has one-dimensional HH^0 */
    bool ok = false;
};

/* Chase of the triangle  HH(D) -> HH(D1) + HH(D2) -> Ext(G, G)  given the
 * ranks of the connecting map per degree (shift-keyed).  Returns the
 * reconstructed HH(D); ok is false when HH^0 != 1 (e.g. a zero bimodule
 * glues a disconnected category).  Infeasible ranks raise
 * chase_failed_error naming the degree. */
chase_result hh_gluing_check(const graded_dims& hh1, const graded_dims& hh2,
                             const graded_dims& ext_gg, const graded_dims& connecting_ranks);

/* Chase of the complement triangle  Ext(S(E), E) -> HH(D) -> HH(complement)
 * for an exceptional E, given the ranks of the first map (shift-keyed). */
graded_dims hh_complement_triangle(const graded_dims& ext_serre_e, const graded_dims& hh_ambient,
                                   const graded_dims& connecting_ranks);

/* HH cohomology of a curve of genus g >= 2: {0:1, -1:g, -2:3g-3}. */
graded_dims curve_hh_cohomology(long long g);

/* Ext(I, I) = {0:1, -1:g1+g2+2, -2:g1g2} for the ideal of a point in the
 * product of two curves. */
graded_dims ext_ideal_ideal(long long g1, long long g2);
/* Ext(S(E), E) = {-3:1, -5:g1g2} for the exotic exceptional object. */
graded_dims ext_serre_exotic(long long g1, long long g2);

/* Connecting ranks of the gluing triangle for the ideal point gluing:
 * rank 1 in degree 0, injective in degree 1, zero in degree 2. */
graded_dims ipg_connecting_ranks(long long g1, long long g2);
/* Both maps of the rpg complement triangle vanish. */
graded_dims rpg_triangle_ranks();

/* Hochschild cohomology of a BN-modification from the dimensions of the
 * three-term complex computing Ext^{2..4}(S(E_L), E_L) and the rank of its
 * second map: {0:1, -2: t1 - rank, -3: t2 - rank}. */
graded_dims hh_bn_modification(long long t0, long long t1, long long t2, long long rank);

}  // namespace sod

#endif
