#ifndef SODLAT_ISOMETRY_HPP
#define SODLAT_ISOMETRY_HPP

#include <string>

#include "sodlat/lattice.hpp"

namespace sod {

enum class isometry_kind { found, refuted_by_invariant, not_found_up_to_bound };

struct isometry_result {
    isometry_kind kind = isometry_kind::not_found_up_to_bound;
    imat transform;          // found: P with |det P| = 1 and P^T A1 P = A2
    std::string invariant;   // refuted: name of the separating invariant
    long long bound = 0;

    bool found() const { return kind == isometry_kind::found; }
};

/* Three-valued bounded isometry test between non-symmetric integer forms.
 *
 * Refutations compare genuine isometry invariants: rank, determinant
 * (congruence by |det|=1 matrices preserves it exactly), Smith normal forms
 * of A and of A + A^T, the signature of A + A^T, and the characteristic
 * polynomial of the Serre operator when both forms are unimodular.
 *
 * The search enumerates columns of P with entries in [-bound, bound],
 * ordered 0, 1, -1, 2, -2, ...; the first isometry in that order is
 * returned, so results are deterministic and favor small entries (equal
 * Gram matrices yield the identity).  NotFoundUpToBound is inconclusive. */
isometry_result isometry_search(const euler_lattice& l1, const euler_lattice& l2,
                                long long bound = 10);

}  // namespace sod

#endif
