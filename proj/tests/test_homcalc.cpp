#include "doctest.h"
#include "sodlat/homcalc.hpp"
#include "sodlat/lattice.hpp"

using namespace sod;

namespace {

/* a two-object category with a deliberately non-associative table */
finite_graded_category broken_category() {
    finite_graded_category cat;
    cat.objects = {"X"};
    cat.hom.assign(1, std::vector<graded_basis>(1));
    cat.hom[0][0].elements = {{"id", 0}, {"u", 0}, {"v", 0}};
    cat.identity = {0};
    /* id laws */
    for (int f = 0; f < 3; ++f) {
        cat.composition[{0, 0, 0, 0, f}] = {{1, f}};
        cat.composition[{0, 0, 0, f, 0}] = {{1, f}};
    }
    /* u o u = v, v o u = id, everything else zero: (u u) u != u (u u) */
    cat.composition[{0, 0, 0, 1, 1}] = {{1, 2}};
    cat.composition[{0, 0, 0, 1, 2}] = {{1, 0}};
    return cat;
}

}  // namespace

TEST_CASE("category validation rejects non-associative tables") {
    CHECK_THROWS_AS(broken_category().validate(), usage_error);
}

TEST_CASE("local model dimensions") {
    ipg_model m = ipg_local_model(3, 5);
    CHECK(m.model.value_basis(m.point1, m.point2).dims() == graded_dims{{0, 1}, {1, 2}});
    CHECK(m.model.value_basis(m.structure1, m.structure2).dims() ==
          graded_dims{{1, 3 + 5}, {2, 15}});
    CHECK(m.model.value_basis(m.structure1, m.point2).dims() == graded_dims{{0, 1}, {1, 3}});
    CHECK(m.model.value_basis(m.point1, m.structure2).dims() == graded_dims{{1, 1}, {2, 5}});
    /* genus-0 factors have no eta classes at all */
    ipg_model m0 = ipg_local_model(0, 0);
    CHECK(m0.model.value_basis(m0.structure1, m0.structure2).dims() == graded_dims{});
}

TEST_CASE("spherical generators act on eps toward independent degree-1 classes") {
    ipg_model m = ipg_local_model(2, 2);
    int eps = m.model.value_basis(m.point1, m.point2).find("eps");
    int nu1 = m.model.factor1.hom_basis(m.point1, m.point1).find("nu");
    int nu2 = m.model.factor2.hom_basis(m.point2, m.point2).find("nu");
    lincomb right = m.model.act_right(m.point1, m.point1, m.point2, nu1, {{1, eps}});
    lincomb left = m.model.act_left(m.point1, m.point2, m.point2, nu2, {{1, eps}});
    REQUIRE(right.size() == 1);
    REQUIRE(left.size() == 1);
    CHECK(right[0].second != left[0].second);
}

TEST_CASE("zero bimodule glues to a plain direct sum of endomorphisms") {
    glued_model m;
    ipg_model donor = ipg_local_model(2, 3);
    m.factor1 = donor.model.factor1;
    m.factor2 = donor.model.factor2;
    m.values.assign(2, std::vector<graded_basis>(2));
    m.validate();
    glue_triple both{0, 0, {}};
    graded_dims expected =
        m.factor1.hom_basis(0, 0).dims().plus(m.factor2.hom_basis(0, 0).dims());
    CHECK(gluing_hom(m, both, both) == expected);
}

TEST_CASE("gluing hom with trivial gluing data") {
    ipg_model m = ipg_local_model(2, 3);
    /* fully inside the first factor: Hom(O_C, O_C) comes back unchanged */
    CHECK(gluing_hom(m.model, m.structure1_triple(), m.structure1_triple()) ==
          graded_dims{{0, 1}, {1, 2}});
    /* no morphisms backwards from the second factor to the first */
    CHECK(gluing_hom(m.model, m.structure2_triple(), m.structure1_triple()) == graded_dims{});
    /* from the first into the second factor: the shifted bimodule value */
    CHECK(gluing_hom(m.model, m.structure1_triple(), m.structure2_triple()) ==
          graded_dims{{2, 5}, {3, 6}});
}

TEST_CASE("exotic object is exceptional in the local model") {
    for (long long g1 : {0, 1, 5})
        for (long long g2 : {0, 2, 4}) {
            ipg_model m = ipg_local_model(g1, g2);
            CHECK(gluing_hom(m.model, m.exotic_triple(), m.exotic_triple()) == graded_dims{{0, 1}});
        }
}

TEST_CASE("the undetermined composition does not leak into the exotic answer") {
    ipg_model on = ipg_local_model(4, 4, true);
    ipg_model off = ipg_local_model(4, 4, false);
    CHECK(gluing_hom(on.model, on.exotic_triple(), on.exotic_triple()) ==
          gluing_hom(off.model, off.exotic_triple(), off.exotic_triple()));
}

TEST_CASE("incomplete models are reported") {
    ipg_model m = ipg_local_model(1, 1);
    glued_model broken = m.model;
    /* drop the action of nu on eps, which the exotic computation needs */
    broken.right_action.erase({m.point1, m.point1, m.point2, 1, 0});
    bool hit = false;
    try {
        gluing_hom(broken, m.exotic_triple(), m.exotic_triple());
    } catch (const incomplete_model_error&) {
        hit = true;
    }
    CHECK(hit);
}

TEST_CASE("glue triple validation") {
    ipg_model m = ipg_local_model(1, 1);
    glue_triple bad;
    bad.f1 = -1;
    bad.f2 = m.point2;
    bad.phi = {{1, 0}};
    CHECK_THROWS_AS(gluing_hom(m.model, bad, bad), usage_error);
    glue_triple wrong_degree{m.point1, m.point2, {{1, 1}}};  /* er has degree 1 */
    CHECK_THROWS_AS(gluing_hom(m.model, wrong_degree, wrong_degree), usage_error);
}

TEST_CASE("generic adherence cancellation") {
    CHECK(exotic_ext_table(1, 1, 1, 1) == graded_dims{{0, 1}});
    CHECK(exotic_ext_table(3, 3, 1, 1) == graded_dims{{0, 1}});
    CHECK(exotic_ext_table(2, 5, 1, 1) == graded_dims{{0, 1}});
    CHECK_THROWS_AS(exotic_ext_table(1, 1, 2, 1), not_adherent_error);
    CHECK_THROWS_AS(exotic_ext_table(0, 1, 1, 1), usage_error);
}

TEST_CASE("bn ext closed forms") {
    /* BNP extremal: p = g = h0 h1 */
    CHECK(bn_ext_table({4, 2, 2, 3, 4}) == graded_dims{{0, 1}});
    CHECK(bn_ext_table({3, 2, 2, 2, 3}) == graded_dims{{0, 1}, {2, 1}});
    CHECK(bn_ext_table({7, 1, 7, 0, 7}) == graded_dims{{0, 1}});
    CHECK(bn_ext_table({5, 2, 1, 5, 1}).at(1) == 4);
    CHECK_THROWS_AS(bn_ext_table({4, 2, 2, 0, 4}), usage_error);  /* RR violated */
    CHECK_THROWS_AS(bn_ext_table({4, 0, 1, 2, 0}), usage_error);  /* h0 = 0 */
    augmentation_data bad{4, 2, 2, 3, 5};
    CHECK_THROWS_AS(bn_ext_table(bad), usage_error);  /* p > g */
}

TEST_CASE("bn cross ext") {
    CHECK(bn_cross_ext_table({0, 3, 2, 2, 2, 3}) == graded_dims{{2, 1}});
    /* self pair of an extremal bundle reduces to the diagonal table */
    CHECK(bn_cross_ext_table({1, 4, 2, 2, 2, 4}) == bn_ext_table({4, 2, 2, 3, 4}));
    /* all maps zero: plain sums */
    CHECK(bn_cross_ext_table({2, 3, 2, 1, 2, 0}) == graded_dims{{0, 2}, {1, 3}, {2, 4}});
    CHECK_THROWS_AS(bn_cross_ext_table({0, 2, 1, 1, 1, 3}), usage_error);
}

TEST_CASE("numerical serre functor on augmentations") {
    /* canonical exceptional (k, 0, 0): lands on the canonical bundle shifted */
    for (long long g : {1, 2, 4, 9}) {
        serre_input e{g, 1, {0, 0}, 0, 0, 0, 0, 0};
        serre_output out = serre_on_augmentation(e);
        CHECK(out.vbar == graded_dims{{-2, g}});
        CHECK(out.fbar == curve_class{1, 2 * g - 2});
        CHECK(out.augmentation_shifted_by_2);
    }
    /* genus 0: the canonical bundle has no sections, everything collapses */
    serre_input e0{0, 1, {0, 0}, 0, 0, 0, 0, 0};
    serre_output out0 = serre_on_augmentation(e0);
    CHECK(out0.vbar == graded_dims{});
    CHECK(out0.fbar == curve_class{1, -2});
    /* genus-4 trigonal: S(fa(L1)) carries fa(L2)[2] data */
    serre_input l1{4, 2, {1, 3}, 2, 2, 6, 0, 6};
    serre_output sw = serre_on_augmentation(l1);
    CHECK(sw.vbar == graded_dims{{-2, 2}});
    CHECK(sw.fbar == curve_class{1, 3});
    CHECK_THROWS_AS(serre_on_augmentation(serre_input{4, 2, {1, 3}, 2, 2, 6, 0, 7}), usage_error);
}

TEST_CASE("serre pairs") {
    serre_pair_data trig{{4, 2, {1, 3}, 2, 2, 6, 0, 6}, true};
    CHECK(serre_pair_check(trig, trig));
    serre_pair_data hyper{{3, 2, {1, 2}, 2, 2, 4, 0, 4}, true};
    CHECK(serre_pair_check(hyper, hyper));

    serre_pair_data not_gg = trig;
    not_gg.globally_generated = false;
    CHECK_THROWS_AS(serre_pair_check(not_gg, trig), hypothesis_not_met_error);

    serre_pair_data h1_bad{{2, 1, {1, 1}, 1, 1, 3, 1, 2}, true};
    try {
        serre_pair_check(h1_bad, h1_bad);
        CHECK(false);
    } catch (const hypothesis_not_met_error& e) {
        CHECK(e.flag.find("h1_f_omega") != std::string::npos);
    }

    /* hypotheses individually fine but the kernel relation fails */
    serre_pair_data omega4{{4, 4, {1, 6}, 4, 1, 9, 0, 9}, true};
    try {
        serre_pair_check(trig, omega4);
        CHECK(false);
    } catch (const hypothesis_not_met_error& e) {
        CHECK(e.flag == "kernel_relation");
    }
}

TEST_CASE("model serialization round trip") {
    ipg_model m = ipg_local_model(2, 1);
    auto j = m.model.to_json();
    glued_model back = glued_model::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(gluing_hom(back, m.exotic_triple(), m.exotic_triple()) == graded_dims{{0, 1}});
    auto jc = m.model.factor1.to_json();
    CHECK(finite_graded_category::from_json(jc).to_json() == jc);
}

TEST_CASE("graded dims serialization") {
    graded_dims d{{-3, 4}, {0, 1}, {2, 7}};
    CHECK(graded_dims::from_json(d.to_json()) == d);
    CHECK(d.euler_characteristic() == -4 + 1 + 7);
    CHECK(d.shifted(1).at(-2) == 4);
}
