#include <random>

#include "doctest.h"
#include "sodlat/families.hpp"
#include "sodlat/lattice.hpp"

using namespace sod;

TEST_CASE("pairing conventions and errors") {
    euler_lattice aug2 = augmented_lattice(2);
    /* chi([E], [O_C]) = 1 - g, first argument indexes the row */
    CHECK(chi(aug2, {Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}) == -1);
    CHECK(chi(aug2, {Int(0), Int(0), Int(0)}, {Int(5), Int(-3), Int(2)}) == 0);
    euler_lattice ipg23 = ipg_lattice(2, 3);
    CHECK(chi(ipg23, {Int(1), Int(0), Int(0), Int(0)}, {Int(0), Int(0), Int(1), Int(0)}) == 1);
    CHECK_THROWS_AS(chi(aug2, {Int(1), Int(0)}, {Int(0), Int(1), Int(0)}), usage_error);
}

TEST_CASE("serre analysis requires unimodularity") {
    euler_lattice l(imat{{Int(2), Int(0)}, {Int(0), Int(1)}});
    CHECK_THROWS_AS(serre_analysis(l), non_unimodular_error);
    /* symmetric unimodular Gram: identity Serre operator */
    euler_lattice sym(imat{{Int(1), Int(2)}, {Int(2), Int(3)}});
    serre_data s = serre_analysis(sym);
    CHECK(s.serre_matrix == imat::identity(2));
    CHECK(s.unipotent);
}

TEST_CASE("mutation through exceptional classes") {
    euler_lattice ipg = ipg_lattice(3, 4);
    kclass e = exotic_class(3, 4);
    kclass ox1{Int(0), Int(1), Int(0), Int(0)};
    CHECK(mutate(ipg, e, ox1, mutation_side::right) == kclass{Int(0), Int(0), Int(0), Int(1)});
    CHECK(mutate(ipg, e, e, mutation_side::right) == kclass{Int(0), Int(0), Int(0), Int(0)});
    kclass not_exc{Int(0), Int(1), Int(0), Int(0)};
    CHECK_THROWS_AS(mutate(ipg, not_exc, e, mutation_side::left), not_exceptional_error);

    /* mutation lands in the orthogonal */
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> coef(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
        kclass v{Int(coef(rng)), Int(coef(rng)), Int(coef(rng)), Int(coef(rng))};
        CHECK(chi(ipg, mutate(ipg, e, v, mutation_side::right), e) == 0);
        CHECK(chi(ipg, e, mutate(ipg, e, v, mutation_side::left)) == 0);
    }
}

TEST_CASE("left mutation of the point class through a BN class") {
    long long g = 4, h0 = 2;
    euler_lattice aug = augmented_lattice(g);
    kclass e = bn_class(g, h0);
    kclass ox{Int(0), Int(0), Int(1)};
    kclass expected = ox;
    Int c = chi(aug, e, ox);
    for (size_t i = 0; i < expected.size(); ++i) expected[i] -= c * e[i];
    CHECK(mutate(aug, e, ox, mutation_side::left) == expected);
}

TEST_CASE("orthogonal complements are saturated") {
    euler_lattice ipg = ipg_lattice(2, 2);
    complement_result comp = orthogonal_complement(ipg, exotic_class(2, 2), mutation_side::left);
    CHECK(comp.lattice.rank() == 3);
    for (const Int& d : smith_normal_form(comp.embedding)) CHECK(d == 1);
    for (long long j = 0; j < comp.embedding.ncols; ++j)
        CHECK(chi(ipg, comp.embedding.col(j), exotic_class(2, 2)) == 0);

    euler_lattice hyper(imat{{Int(1), Int(0)}, {Int(0), Int(1)}});
    complement_result c2 = orthogonal_complement(hyper, {Int(1), Int(0)}, mutation_side::left);
    CHECK(c2.lattice.rank() == 1);
    CHECK(c2.embedding.col(0) == ivec{Int(0), Int(1)});
    CHECK(c2.lattice.gram == imat{{Int(1)}});

    CHECK_THROWS_AS(orthogonal_complement(hyper, {Int(0), Int(0)}, mutation_side::left),
                    usage_error);
}

TEST_CASE("bn complement in the paper basis") {
    for (long long g : {2, 4, 6, 9, 12})
        for (long long h0 = 1; h0 <= g; ++h0) {
            if (g % h0 != 0) continue;
            long long h1 = g / h0;
            euler_lattice l = bn_complement_lattice(g, h0, h1);
            CHECK(l.gram == imat{{Int(1 - h1), Int(g - h0 - h1)}, {Int(1), Int(1 - h0)}});
            CHECK(l.determinant == 1);
        }
    CHECK(bn_complement_lattice(5, 1, 5).gram == imat{{Int(-4), Int(-1)}, {Int(1), Int(0)}});
    CHECK_THROWS_AS(bn_complement_lattice(6, 4, 2), not_bnp_extremal_error);
    CHECK_THROWS_AS(bn_class(7, 2), not_bnp_extremal_error);
}

TEST_CASE("class predicates") {
    euler_lattice ipg = ipg_lattice(5, 7);
    auto p = class_predicates(ipg, exotic_class(5, 7));
    CHECK(p.chi_self == 1);
    CHECK(p.numerically_exceptional);
    CHECK(!p.numerically_2spherical);
    /* hyperelliptic pencil class 2[E] - [O_C] - 2[O_x] at genus 3 */
    euler_lattice aug3 = augmented_lattice(3);
    auto q = class_predicates(aug3, {Int(2), Int(-1), Int(-2)});
    CHECK(q.chi_self == 2);
    CHECK(q.numerically_2spherical);
    auto z = class_predicates(aug3, {Int(0), Int(0), Int(0)});
    CHECK(z.chi_self == 0);
}

TEST_CASE("lattice JSON round trip") {
    euler_lattice l = rpg_lattice(2, 5);
    auto j = lattice_to_json(l);
    CHECK(j["basis"].size() == 3);
    euler_lattice back = lattice_from_json(j);
    CHECK(back.gram == l.gram);
    CHECK(back.basis == l.basis);
    CHECK(lattice_to_json(back) == j);
    CHECK_THROWS_AS(lattice_from_json(nlohmann::ordered_json{{"basis", {"a"}}}), usage_error);
}

TEST_CASE("family grammar") {
    CHECK(parse_family("augmented:7").g == 7);
    CHECK(parse_family("ipg:2,3").g2 == 3);
    CHECK(parse_family("rpg:0,4").kind == family_kind::rpg);
    CHECK(parse_family("bncomp:6,2,3").h1 == 3);
    CHECK(parse_family("bncomp:6,2,3").to_string() == "bncomp:6,2,3");
    CHECK_THROWS_AS(parse_family("augmented:-1"), usage_error);
    CHECK_THROWS_AS(parse_family("augmented:20000"), usage_error);
    CHECK_THROWS_AS(parse_family("ipg:2"), usage_error);
    CHECK_THROWS_AS(parse_family("bncomp:6,4,2"), usage_error);
    CHECK_THROWS_AS(parse_family("mystery:1"), usage_error);
}
