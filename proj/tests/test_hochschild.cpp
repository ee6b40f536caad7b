#include "doctest.h"
#include "sodlat/hochschild.hpp"

using namespace sod;

TEST_CASE("homology tables") {
    CHECK(hh_homology(parse_family("augmented:4")) == graded_dims{{1, 4}, {0, 3}, {-1, 4}});
    CHECK(hh_homology(parse_family("ipg:2,3")) == graded_dims{{1, 5}, {0, 4}, {-1, 5}});
    CHECK(hh_homology(parse_family("rpg:0,0")) == graded_dims{{0, 3}});
    CHECK(hh_homology(parse_family("bncomp:4,2,2")) == graded_dims{{1, 4}, {0, 2}, {-1, 4}});
}

TEST_CASE("cohomology tables and their range guards") {
    CHECK(hh_cohomology(parse_family("augmented:1")) == graded_dims{{0, 1}, {-1, 1}, {-2, 1}});
    CHECK(hh_cohomology(parse_family("augmented:0")) == graded_dims{{0, 1}, {-1, 3}});
    CHECK(hh_cohomology(parse_family("rpg:2,2")) ==
          graded_dims{{0, 1}, {-2, 9}, {-3, 4}, {-4, 4}});
    CHECK(hh_cohomology(parse_family("ipg:2,2")) == graded_dims{{0, 1}, {-2, 8}, {-3, 4}});
    CHECK_THROWS_AS(hh_cohomology(parse_family("ipg:1,5")), unsupported_range_error);
    CHECK_THROWS_AS(hh_cohomology(parse_family("rpg:2,0")), unsupported_range_error);
    CHECK_THROWS_AS(hh_cohomology(parse_family("bncomp:4,2,2")), unsupported_range_error);
}

TEST_CASE("gluing chase reproduces the ipg table") {
    chase_result r = hh_gluing_check(curve_hh_cohomology(2), curve_hh_cohomology(3),
                                     ext_ideal_ideal(2, 3), ipg_connecting_ranks(2, 3));
    CHECK(r.ok);
    CHECK(r.table == hh_cohomology(parse_family("ipg:2,3")));
}

TEST_CASE("zero bimodule gives a disconnected reconstruction, flagged") {
    chase_result r = hh_gluing_check(curve_hh_cohomology(2), curve_hh_cohomology(3), {}, {});
    CHECK(!r.ok);
    CHECK(r.table.at(0) == 2);
    CHECK(r.table == curve_hh_cohomology(2).plus(curve_hh_cohomology(3)));
}

TEST_CASE("infeasible connecting ranks fail loudly") {
    graded_dims huge_rank{{0, 5}};
    CHECK_THROWS_AS(hh_gluing_check(curve_hh_cohomology(2), curve_hh_cohomology(2),
                                    ext_ideal_ideal(2, 2), huge_rank),
                    chase_failed_error);
    try {
        hh_gluing_check(curve_hh_cohomology(2), curve_hh_cohomology(2), ext_ideal_ideal(2, 2),
                        huge_rank);
    } catch (const chase_failed_error& e) {
        CHECK(e.degree == 0);
    }
}

TEST_CASE("complement triangle reproduces the rpg table") {
    for (long long g1 = 2; g1 <= 5; ++g1)
        for (long long g2 = 2; g2 <= 5; ++g2) {
            family_spec ipg = parse_family("ipg:" + std::to_string(g1) + "," + std::to_string(g2));
            family_spec rpg = parse_family("rpg:" + std::to_string(g1) + "," + std::to_string(g2));
            CHECK(hh_complement_triangle(ext_serre_exotic(g1, g2), hh_cohomology(ipg),
                                         rpg_triangle_ranks()) == hh_cohomology(rpg));
        }
}

TEST_CASE("bn modification table") {
    CHECK(hh_bn_modification(9, 24, 16, 16) == graded_dims{{0, 1}, {-2, 8}});
    CHECK(hh_bn_modification(9, 24, 16, 0) == graded_dims{{0, 1}, {-2, 24}, {-3, 16}});
    CHECK_THROWS_AS(hh_bn_modification(9, 24, 16, 17), usage_error);
}
