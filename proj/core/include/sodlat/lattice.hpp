#ifndef SODLAT_LATTICE_HPP
#define SODLAT_LATTICE_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "sodlat/matrix.hpp"

namespace sod {

/* Free abelian group of finite rank with a (generally non-symmetric)
 * integer bilinear form chi.  Convention: chi(v, w) = v^T * gram * w,
 * i.e. the row index of the Gram matrix is the first argument. */
struct euler_lattice {
    imat gram;
    std::vector<std::string> basis;
    Int determinant;

    euler_lattice() : determinant(1) {}
    euler_lattice(imat g, std::vector<std::string> labels);
    explicit euler_lattice(imat g);

    long long rank() const { return gram.nrows; }
    bool unimodular() const { return determinant == 1 || determinant == -1; }
};

/* Integer coordinate vector in the basis of an ambient lattice. */
using kclass = ivec;

enum class mutation_side { left, right };

/* chi(v, w) = v^T A w */
Int chi(const euler_lattice& l, const kclass& v, const kclass& w);

struct serre_data {
    imat serre_matrix;  // S with chi(x, y) = chi(y, S x); S = A^{-1} A^T
    ipoly characteristic_polynomial;
    bool quasiunipotent = false;  // char poly a product of cyclotomics
    bool unipotent = false;       // char poly = (t-1)^rank
};

/* Requires l unimodular, so that A^{-1} A^T is integral. */
serre_data serre_analysis(const euler_lattice& l);

/* Reflection of v through a class e with chi(e,e) = 1:
 * right: v - chi(v,e) e;  left: v - chi(e,v) e. */
kclass mutate(const euler_lattice& l, const kclass& e, const kclass& v, mutation_side side);

struct complement_result {
    euler_lattice lattice;
    imat embedding;  // columns express the sub-basis in ambient coordinates
};

/* Saturated orthogonal complement of e: left side is { v : chi(v, e) = 0 },
 * right side { v : chi(e, v) = 0 }; basis chosen by HNF of the integer
 * kernel, Gram restricted accordingly. */
complement_result orthogonal_complement(const euler_lattice& l, const kclass& e,
                                        mutation_side side);

struct class_predicate_result {
    Int chi_self;
    /* Necessary numerical conditions only, not sufficient for the
     * corresponding categorical property. */
    bool numerically_exceptional = false;  // chi(v,v) = 1
    bool numerically_2spherical = false;   // chi(v,v) = 2
};

class_predicate_result class_predicates(const euler_lattice& l, const kclass& v);

/* Lattice file format: {"basis": [...], "gram": [[...]]}, row-major integers. */
nlohmann::ordered_json lattice_to_json(const euler_lattice& l);
euler_lattice lattice_from_json(const nlohmann::ordered_json& j);

}  // namespace sod

#endif
