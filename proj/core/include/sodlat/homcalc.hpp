#ifndef SODLAT_HOMCALC_HPP
#define SODLAT_HOMCALC_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "sodlat/curvek.hpp"
#include "sodlat/graded.hpp"

namespace sod {

/* Integer linear combination of basis elements, by index. */
using lincomb = std::vector<std::pair<long long, int>>;

struct graded_basis {
    struct element {
        std::string name;
        int degree = 0;
    };
    std::vector<element> elements;

    int find(const std::string& name) const;  // -1 if absent
    graded_dims dims() const;
};

/* Finitely many objects with finite-dimensional graded Hom spaces and
 * degree-additive bilinear composition, given by explicit tables on basis
 * elements (absent table entry = zero map).  All models here are formal:
 * the grading carries all the structure, there are no differentials. */
struct finite_graded_category {
    std::vector<std::string> objects;
    /* hom[src][dst] */
    std::vector<std::vector<graded_basis>> hom;
    /* identity basis index in hom[x][x] */
    std::vector<int> identity;
    /* key (src, mid, dst, f, g) -> g o f  for f: src->mid, g: mid->dst */
    std::map<std::tuple<int, int, int, int, int>, lincomb> composition;

    long long object_count() const { return static_cast<long long>(objects.size()); }
    const graded_basis& hom_basis(int src, int dst) const;
    lincomb compose(int src, int mid, int dst, int f, int g) const;
    lincomb compose(int src, int mid, int dst, const lincomb& f, const lincomb& g) const;

    /* identity unit laws and associativity on all basis triples; throws
     * usage_error on the first violation */
    void validate() const;

    nlohmann::ordered_json to_json() const;
    static finite_graded_category from_json(const nlohmann::ordered_json& j);
};

/* A gluing datum at the finite-model level: two factor categories and the
 * bimodule values G(x1, x2) with their left/right actions.
 *
 * Right action (precomposition in the contravariant slot):
 *   f1: x1 -> y1 in factor 1,  v in G(y1, x2)   =>  v . f1 in G(x1, x2).
 * Left action (postcomposition):
 *   f2: x2 -> y2 in factor 2,  v in G(x1, x2)   =>  f2 . v in G(x1, y2).
 * Missing action entries are treated as unknown, not zero; using one in a
 * computation raises incomplete_model_error. */
struct glued_model {
    finite_graded_category factor1;
    finite_graded_category factor2;
    /* values[x1][x2] */
    std::vector<std::vector<graded_basis>> values;
    std::map<std::tuple<int, int, int, int, int>, lincomb> right_action;  // (x1,y1,x2,f1,v)
    std::map<std::tuple<int, int, int, int, int>, lincomb> left_action;   // (x1,x2,y2,f2,v)

    const graded_basis& value_basis(int x1, int x2) const;
    lincomb act_right(int x1, int y1, int x2, int f1, const lincomb& v) const;
    lincomb act_left(int x1, int x2, int y2, int f2, const lincomb& v) const;

    /* factor validation plus degree additivity, unit actions, associativity
     * of the module structures and commutation of the two actions, checked
     * on every stored entry */
    void validate() const;

    nlohmann::ordered_json to_json() const;
    static glued_model from_json(const nlohmann::ordered_json& j);
};

/* (F1, F2, phi): the object glued from F1 and F2 along a degree-0 element
 * phi of G(F1, F2); its class in the glued lattice is [F1] - [F2].
 * Component index -1 means the zero object. */
struct glue_triple {
    int f1 = -1;
    int f2 = -1;
    lincomb phi;
};

/* Graded dimensions of RHom(t, u) in the glued category, computed from the
 * triangle RHom(t,u) -> Hom(F1,F1') + Hom(F2,F2') -> G(F1,F2') whose second
 * map is (f1, f2) |-> phi' o f1 - f2 o phi, by exact rank bookkeeping.
 * Keys are cohomological degrees. */
graded_dims gluing_hom(const glued_model& model, const glue_triple& t, const glue_triple& u);

/* The local model of an ideal point gluing: objects {O_C, O_x} on each
 * factor, Hom(O_C,O_C) = k + k^g[-1], Hom(O_C,O_x) = k lambda,
 * Hom(O_x,O_C) = k mu[-1], Hom(O_x,O_x) = k + k (lambda mu)[-1], and the
 * bimodule computed from the two-step resolution of the ideal of a point.
 * mu_lambda_nonzero picks the undetermined composition mu o lambda in
 * Ext^1(O_C, O_C): nonzero (first basis vector) or zero. */
struct ipg_model {
    glued_model model;
    int structure1 = 0, point1 = 1;  // object ids in factor 1
    int structure2 = 0, point2 = 1;  // object ids in factor 2
    glue_triple structure1_triple() const { return {structure1, -1, {}}; }
    glue_triple point1_triple() const { return {point1, -1, {}}; }
    glue_triple structure2_triple() const { return {-1, structure2, {}}; }
    glue_triple point2_triple() const { return {-1, point2, {}}; }
    /* (O_x1, O_x2, eps) */
    glue_triple exotic_triple() const;
};

ipg_model ipg_local_model(long long g1, long long g2, bool mu_lambda_nonzero = true);

/* Ext table of the cone object glued from two spherical classes along the
 * adherence pattern: K_i spherical with Ext(K_i,K_i) = k + k[-d_i] and
 * one-dimensional adherence spaces; the cancellation yields k in degree 0.
 * Computed by the same rank chase, not asserted. */
graded_dims exotic_ext_table(int d1, int d2, long long adherence1, long long adherence2);

/* Cohomological numbers of a line bundle driving the self-Ext chase of its
 * augmentation: genus, h^0, h^1, degree, and the rank of the Petri-type
 * multiplication map Ext^1(L,L) -> H^0(L)^dual x H^1(L). */
struct augmentation_data {
    long long g = 0;
    long long h0 = 0;
    long long h1 = 0;
    long long degree = 0;
    long long petri_rank = 0;

    void validate() const;  // h0 - h1 = degree + 1 - g, 0 <= p <= min(g, h0 h1)
};

/* Ext(fa(L), fa(L)) = {0: 1, 1: g - p, 2: h0 h1 - p}; the closed form of
 * the long-exact-sequence chase with Petri rank p. */
graded_dims bn_ext_table(const augmentation_data& a);

/* Mixed chase data for Ext(fa(L1), fa(L2)). */
struct bn_cross_data {
    long long hom12 = 0;      // dim Hom(L1, L2)
    long long ext1_12 = 0;    // dim Ext^1(L1, L2)
    long long h0_1 = 0;       // h^0(L1)
    long long h0_2 = 0;       // h^0(L2)
    long long h1_2 = 0;       // h^1(L2)
    long long mixed_rank = 0; // rank of Ext^1(L1,L2) -> H^0(L1)^dual x H^1(L2)
};

/* {0: hom12, 1: ext1_12 - m, 2: h0_1 * h1_2 - m} */
graded_dims bn_cross_ext_table(const bn_cross_data& d);

/* Input for the numerical Serre functor on an augmentation-shaped object
 * (V, F, phi): dim V, the class and cohomology of F, the cohomology of
 * F x omega, and the rank of the multiplication V x H^0(omega) ->
 * H^0(F x omega). */
struct serre_input {
    long long g = 0;
    long long dim_v = 0;
    curve_class f_class{0, 0};
    long long h0_f = 0, h1_f = 0;
    long long h0_fw = 0, h1_fw = 0;  // H^bullet(F x omega)
    long long mult_rank = 0;

    void validate() const;
};

struct serre_output {
    /* cone of V x H^0(omega) -> H^bullet(F x omega), shifted by [1];
     * cohomological keys */
    graded_dims vbar;
    /* dim_v [omega] - [F x omega] */
    curve_class fbar{0, 0};
    /* vbar concentrated in degree -2, i.e. a vector space shifted by [2] */
    bool vbar_is_shifted_space = false;
    /* the output looks like fa(F')[2] for a sheaf class F' */
    bool augmentation_shifted_by_2 = false;
};

serre_output serre_on_augmentation(const serre_input& in);

/* Data for one member of a Serre-swapped pair of augmentations. */
struct serre_pair_data {
    serre_input base;
    bool globally_generated = false;
};

/* True iff the numerical Serre functor sends fa(F1) to fa(F2)[2] and
 * conversely; throws hypothesis_not_met_error naming the first failed
 * hypothesis (global generation, H^1(F x omega) = 0, surjective
 * multiplication, or the kernel relation on classes). */
bool serre_pair_check(const serre_pair_data& f1, const serre_pair_data& f2);

}  // namespace sod

#endif
