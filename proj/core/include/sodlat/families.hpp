#ifndef SODLAT_FAMILIES_HPP
#define SODLAT_FAMILIES_HPP

#include <string>
#include <vector>

#include "sodlat/curvek.hpp"
#include "sodlat/lattice.hpp"

namespace sod {

enum class family_kind { augmented, ipg, rpg, bn_complement };

/* CLI grammar: augmented:G | ipg:G1,G2 | rpg:G1,G2 | bncomp:G,H0,H1 */
struct family_spec {
    family_kind kind = family_kind::augmented;
    long long g = 0;   // augmented / bn_complement
    long long g1 = 0;  // ipg / rpg
    long long g2 = 0;
    long long h0 = 0;  // bn_complement only
    long long h1 = 0;

    std::string to_string() const;
};

/* Throws usage_error on malformed strings, negative genera, or genera
 * above the CLI cap of 10^4. */
family_spec parse_family(const std::string& text);

euler_lattice lattice_for(const family_spec& spec);

/* Rank-1 lattice of the base point of an augmentation. */
euler_lattice point_lattice();
/* K_num of a genus-g curve in the basis [O_C], [O_x]. */
euler_lattice curve_lattice(long long g, const std::string& suffix = "");

/* Block-triangular Gram [[A1, G], [0, A2]] of a semiorthogonal gluing. */
euler_lattice glue_lattices(const euler_lattice& l1, const euler_lattice& l2, const imat& g);

/* Gluing of a point and a curve along the structure sheaf; basis
 * [E], [O_C], [O_x]. */
euler_lattice augmented_lattice(long long g);

/* Gluing of two curves along the ideal sheaf of a point in the product;
 * basis [O_C1], [O_x1], [O_C2], [O_x2]. */
euler_lattice ipg_lattice(long long g1, long long g2);

/* (0, 1, 0, -1): the class of the exotic exceptional object in the ipg
 * basis; chi(v, v) = 1 for every genus pair. */
kclass exotic_class(long long g1, long long g2);

/* The three basis vectors [O_C2]+[O_x1]-[O_x2], [O_C1]-g1[O_x1]-g2[O_x2],
 * [O_C2]+[O_x1] used to present the reduced ideal point gluing. */
std::vector<kclass> rpg_basis_vectors(long long g1, long long g2);

/* Left orthogonal complement of the exotic class inside ipg_lattice,
 * re-expressed in rpg_basis_vectors.  Constructed, not hard-coded: the
 * expected closed-form Gram lives only in the regression suite. */
euler_lattice rpg_lattice(long long g1, long long g2);

/* h0 [E] - [O_C] - d [O_x] with d = h0 - h1 + g - 1, the class of the
 * augmentation of an extremal line bundle with h0 * h1 = g. */
kclass bn_class(long long g, long long h0);

/* Left orthogonal complement of bn_class in augmented_lattice(g),
 * re-based to [E] - h1[O_x], [E] - [O_C] - h0[O_x]. */
euler_lattice bn_complement_lattice(long long g, long long h0, long long h1);

/* Euler lattice of the path quiver with the given arrow multiplicities
 * (vertices = arrows.size() + 1, no relations). */
euler_lattice linear_quiver_lattice(const std::vector<long long>& arrows);

}  // namespace sod

#endif
