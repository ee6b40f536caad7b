#include "doctest.h"
#include "sodlat/families.hpp"

using namespace sod;

TEST_CASE("augmented lattice at small genus") {
    CHECK(augmented_lattice(0).gram ==
          imat{{Int(1), Int(1), Int(1)}, {Int(0), Int(1), Int(1)}, {Int(0), Int(-1), Int(0)}});
    CHECK(augmented_lattice(2).gram ==
          imat{{Int(1), Int(-1), Int(1)}, {Int(0), Int(-1), Int(1)}, {Int(0), Int(-1), Int(0)}});
    for (long long g = 0; g <= 40; ++g) CHECK(augmented_lattice(g).determinant == 1);
}

TEST_CASE("ipg entries straight from the pairing") {
    euler_lattice l = ipg_lattice(2, 3);
    CHECK(l.gram(0, 2) == 1);  /* g1 g2 - g1 - g2 */
    CHECK(ipg_lattice(0, 0).gram(0, 2) == 0);
    CHECK(l.basis == std::vector<std::string>{"[O_C1]", "[O_x1]", "[O_C2]", "[O_x2]"});
    for (long long g1 = 0; g1 <= 20; ++g1)
        for (long long g2 = 0; g2 <= 20; ++g2) {
            Int d = ipg_lattice(g1, g2).determinant;
            CHECK((d == 1 || d == -1));
        }
}

TEST_CASE("rpg is constructed, matches the closed form, degenerates correctly") {
    CHECK(rpg_lattice(1, 1).gram ==
          imat{{Int(1), Int(-1), Int(1)}, {Int(0), Int(-1), Int(1)}, {Int(0), Int(-1), Int(0)}});
    for (long long g1 = 0; g1 <= 6; ++g1)
        for (long long g2 = 0; g2 <= 6; ++g2)
            CHECK(rpg_lattice(g1, g2).gram(0, 1) == -1);
}

TEST_CASE("closed forms hold out to genus 40 for every constructor") {
    for (long long g1 : {0LL, 1LL, 17LL, 40LL})
        for (long long g2 : {0LL, 2LL, 23LL, 40LL}) {
            imat ipg_want{{Int(1 - g1), Int(1), Int(g1 * g2 - g1 - g2), Int(1 - g1)},
                          {Int(-1), Int(0), Int(g2 - 1), Int(-1)},
                          {Int(0), Int(0), Int(1 - g2), Int(1)},
                          {Int(0), Int(0), Int(-1), Int(0)}};
            CHECK(ipg_lattice(g1, g2).gram == ipg_want);
            imat rpg_want{{Int(1), Int(-1), Int(1)},
                          {Int(0), Int(1 - g1 - g2), Int(1)},
                          {Int(0), Int(-1), Int(0)}};
            CHECK(rpg_lattice(g1, g2).gram == rpg_want);
        }
}

TEST_CASE("exotic class is exceptional and lands in the complement") {
    for (long long g1 : {0, 1, 4})
        for (long long g2 : {0, 2, 7}) {
            euler_lattice l = ipg_lattice(g1, g2);
            kclass e = exotic_class(g1, g2);
            CHECK(chi(l, e, e) == 1);
            CHECK(!is_zero(e));
            for (const kclass& b : rpg_basis_vectors(g1, g2)) CHECK(chi(l, b, e) == 0);
        }
}

TEST_CASE("bn classes") {
    CHECK(bn_class(4, 2) == kclass{Int(2), Int(-1), Int(-3)});
    CHECK(bn_class(5, 1) == kclass{Int(1), Int(-1), Int(0)});
    euler_lattice aug = augmented_lattice(6);
    CHECK(chi(aug, bn_class(6, 2), bn_class(6, 2)) == 1);
    CHECK(chi(aug, bn_class(6, 3), bn_class(6, 3)) == 1);
}

TEST_CASE("glue with a zero pairing is an orthogonal sum") {
    euler_lattice c1 = curve_lattice(2, "1");
    euler_lattice c2 = curve_lattice(3, "2");
    imat zero(2, 2);
    euler_lattice glued = glue_lattices(c1, c2, zero);
    CHECK(glued.rank() == 4);
    CHECK(glued.gram(0, 2) == 0);
    CHECK(glued.gram(2, 0) == 0);
    CHECK(glued.gram(0, 0) == c1.gram(0, 0));
    CHECK(glued.gram(3, 2) == c2.gram(1, 0));
    CHECK_THROWS_AS(glue_lattices(c1, c2, imat(1, 2)), usage_error);
}

TEST_CASE("linear quiver lattice") {
    CHECK(linear_quiver_lattice({1, 2}).gram ==
          imat{{Int(1), Int(-1), Int(0)}, {Int(0), Int(1), Int(-2)}, {Int(0), Int(0), Int(1)}});
}
