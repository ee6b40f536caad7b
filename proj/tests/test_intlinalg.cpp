#include "doctest.h"
#include "sodlat/matrix.hpp"
#include "sodlat/poly.hpp"

using namespace sod;

TEST_CASE("determinant and rank on small matrices") {
    imat m{{Int(2), Int(1)}, {Int(7), Int(4)}};
    CHECK(det(m) == 1);
    CHECK(rank(m) == 2);
    imat singular{{Int(1), Int(2)}, {Int(2), Int(4)}};
    CHECK(det(singular) == 0);
    CHECK(rank(singular) == 1);
    CHECK(det(imat::identity(5)) == 1);
}

TEST_CASE("characteristic polynomial matches direct expansion") {
    imat m{{Int(3), Int(1)}, {Int(2), Int(0)}};
    /* det(tI - m) = t^2 - 3t - 2 */
    CHECK(char_poly(m) == ipoly(ivec{Int(-2), Int(-3), Int(1)}));
    imat n = imat::identity(3);
    n(0, 1) = 5;
    CHECK(char_poly(n) == ipoly::linear(1) * ipoly::linear(1) * ipoly::linear(1));
}

TEST_CASE("unimodular inverse") {
    imat m{{Int(2), Int(3)}, {Int(1), Int(2)}};
    CHECK(inverse_unimodular(m) * m == imat::identity(2));
    imat bad{{Int(2), Int(0)}, {Int(0), Int(2)}};
    CHECK_THROWS_AS(inverse_unimodular(bad), non_unimodular_error);
}

TEST_CASE("integer kernel is a saturated sublattice") {
    imat m{{Int(2), Int(4), Int(6)}};
    imat k = integer_kernel(m);
    CHECK(k.ncols == 2);
    CHECK((m * k).is_zero());
    ivec snf = smith_normal_form(k);
    for (const Int& d : snf) CHECK(d == 1);

    /* kernel of an injective map is trivial */
    imat inj{{Int(1), Int(0)}, {Int(0), Int(1)}, {Int(3), Int(5)}};
    CHECK(integer_kernel(inj.transposed()).ncols == 1);
    CHECK(integer_kernel(imat::identity(3)).ncols == 0);
}

TEST_CASE("solving against a column-echelon basis") {
    imat m{{Int(1), Int(2), Int(3)}};
    imat k = integer_kernel(m);
    ivec inside = k * ivec{Int(2), Int(-5)};
    auto x = solve_column_echelon(k, inside);
    REQUIRE(x.has_value());
    CHECK(k * *x == inside);
    CHECK(!solve_column_echelon(k, ivec{Int(1), Int(0), Int(0)}).has_value());
}

TEST_CASE("smith normal form invariant factors") {
    imat m{{Int(2), Int(0)}, {Int(0), Int(6)}};
    CHECK(smith_normal_form(m) == ivec{Int(2), Int(6)});
    imat n{{Int(6), Int(4)}, {Int(4), Int(6)}};
    CHECK(smith_normal_form(n) == ivec{Int(2), Int(10)});
}

TEST_CASE("cyclotomic trial division") {
    CHECK(cyclotomic(1) == ipoly::linear(1));
    CHECK(cyclotomic(2) == ipoly(ivec{Int(1), Int(1)}));
    CHECK(cyclotomic(6) == ipoly(ivec{Int(1), Int(-1), Int(1)}));
    /* t^2 + t + 1 and (t-1)(t+1) are cyclotomic products, t^2 - t - 1 is not */
    CHECK(is_cyclotomic_product(ipoly(ivec{Int(1), Int(1), Int(1)})));
    CHECK(is_cyclotomic_product(ipoly::linear(1) * ipoly(ivec{Int(1), Int(1)})));
    CHECK(!is_cyclotomic_product(ipoly(ivec{Int(-1), Int(-1), Int(1)})));
}

TEST_CASE("signature of symmetric matrices") {
    imat m{{Int(2), Int(0)}, {Int(0), Int(-3)}};
    signature_t s = symmetric_signature(m);
    CHECK(s.positive == 1);
    CHECK(s.negative == 1);
    CHECK(s.zero == 0);
    imat zero(2, 2);
    s = symmetric_signature(zero);
    CHECK(s.zero == 2);
}
