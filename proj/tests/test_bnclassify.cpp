#include <random>

#include "doctest.h"
#include "sodlat/bnclassify.hpp"

using namespace sod;

TEST_CASE("degenerate form invariants") {
    CHECK(form_equivalent({0, 0, 0}, {0, 0, 0}));
    CHECK(!form_equivalent({0, 0, 0}, {1, 0, 0}));
    /* -2(x-y)^2 vs -8r^2 and -(2x-y)^2 vs -9r^2: same discriminant, different scalar */
    CHECK(!form_equivalent({-2, 4, -2}, {-8, 0, 0}));
    CHECK(!form_equivalent({-4, 4, -1}, {-9, 0, 0}));
    CHECK(form_equivalent({-3, 0, 0}, {0, 0, -3}));
    CHECK(form_equivalent({1, 2, 1}, {1, 0, 0}));  /* (x+y)^2 ~ x^2 */
}

TEST_CASE("definite reduction") {
    CHECK(form_equivalent({1, 0, 1}, {1, 2, 2}));      /* x^2+y^2 under x -> x+y */
    CHECK(!form_equivalent({1, 0, 1}, {1, 1, 1}));     /* disc -4 vs -3 */
    CHECK(!form_equivalent({1, 0, 5}, {2, 2, 3}));     /* same disc -20, distinct classes */
    CHECK(!form_equivalent({1, 0, 1}, {-1, 0, -1}));   /* opposite definiteness */
}

TEST_CASE("indefinite nonsquare cycles") {
    CHECK(form_equivalent({1, 0, -2}, {-2, 0, 1}));
    CHECK(!form_equivalent({1, 0, -10}, {2, 0, -5}));  /* disc 40, inequivalent genera */
    CHECK(form_equivalent({1, 6, -1}, {-1, 6, 1}));
}

TEST_CASE("square discriminant normalization") {
    /* 3xy + y^2 represents only 0,1 mod 3; 3xy + 2y^2 only 0,2 mod 3 */
    CHECK(!form_equivalent({0, 3, 1}, {0, 3, 2}));
    CHECK(form_equivalent({0, 3, 0}, {0, 3, 3}));   /* 3xy ~ 3y(x+y) */
    CHECK(!form_equivalent({0, 3, 0}, {0, 3, 1}));  /* contents 3 vs 1 */
    /* all primitive forms of discriminant 1 are equivalent to xy */
    CHECK(form_equivalent({1, 3, 2}, {0, 1, 0}));
    CHECK(form_equivalent({0, 1, 0}, {1, 1, 0}));
}

TEST_CASE("equivalence relation spot checks") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> coef(-6, 6);
    auto random_transform = [&](const bin_quad_form& f) {
        /* elementary transforms keep things small */
        bin_quad_form g = f;
        for (int i = 0; i < 4; ++i) {
            long long t = coef(rng) % 3;
            switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
                case 0: g = g.substituted(1, t, 0, 1); break;
                case 1: g = g.substituted(1, 0, t, 1); break;
                default: g = g.substituted(0, 1, 1, 0); break;
            }
        }
        return g;
    };
    for (int trial = 0; trial < 40; ++trial) {
        bin_quad_form f{coef(rng), coef(rng), coef(rng)};
        bin_quad_form g = random_transform(f);
        bin_quad_form h = random_transform(g);
        CHECK(form_equivalent(f, f));
        CHECK(form_equivalent(f, g));
        CHECK(form_equivalent(g, f));
        CHECK(form_equivalent(f, h));  /* transitivity along the chain */
    }
}

TEST_CASE("classification entries") {
    auto g9 = classify_bn(9);
    REQUIRE(g9.size() == 3);
    CHECK(g9[0].h0 == 1);
    CHECK(g9[0].curve_equivalent);
    CHECK(g9[1].h0 == 3);
    CHECK(g9[1].disc == 0);
    CHECK(!g9[1].curve_equivalent);
    CHECK(g9[1].symmetrized == bin_quad_form{-2, 4, -2});

    auto g6 = classify_bn(6);
    for (const auto& e : g6)
        if (e.h0 == 2) {
            /* a = 1, b = 2: disc ab(ab-4) = -4, definite, so never a curve form */
            CHECK(e.disc == -4);
            CHECK(!e.curve_equivalent);
        }
    CHECK(classify_bn(0).empty());

    for (long long g = 1; g <= 12; ++g)
        for (const auto& e : classify_bn(g)) {
            Int a = e.h0 - 1, b = e.h1 - 1;
            CHECK(e.symmetrized == bin_quad_form{-b, a * b, -a});
            CHECK(e.disc == a * b * (a * b - 4));
        }
}

TEST_CASE("curve form and symmetrization helpers") {
    CHECK(curve_symmetrized_form(5) == bin_quad_form{-4, 0, 0});
    euler_lattice l(imat{{Int(1), Int(3)}, {Int(-1), Int(2)}});
    CHECK(symmetrized_form(l) == bin_quad_form{1, 2, 2});
    CHECK_THROWS_AS(symmetrized_form(euler_lattice(imat::identity(3))), usage_error);
}
