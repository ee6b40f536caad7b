#include <map>
#include <vector>

#include "doctest.h"
#include "sodlat/curvek.hpp"

using namespace sod;

namespace {

/* number of standard Young tableaux of an r x s rectangle, by dynamic
 * programming over partition chains; independent of the closed form */
Int syt_rectangle(long long r, long long s) {
    std::map<std::vector<long long>, Int> count;
    count[std::vector<long long>(static_cast<size_t>(r), 0)] = 1;
    for (long long step = 0; step < r * s; ++step) {
        std::map<std::vector<long long>, Int> next;
        for (const auto& [shape, ways] : count)
            for (size_t row = 0; row < shape.size(); ++row) {
                if (shape[row] >= s) continue;
                if (row > 0 && shape[row] >= shape[row - 1]) continue;
                auto grown = shape;
                ++grown[row];
                next[grown] += ways;
            }
        count = std::move(next);
    }
    return count[std::vector<long long>(static_cast<size_t>(r), s)];
}

}  // namespace

TEST_CASE("riemann-roch pairing entries") {
    for (long long g : {0, 1, 2, 5, 11}) {
        CHECK(curve_chi(g, structure_class(), structure_class()) == 1 - g);
        CHECK(curve_chi(g, structure_class(), point_class()) == 1);
        CHECK(curve_chi(g, point_class(), structure_class()) == -1);
        CHECK(curve_chi(g, point_class(), point_class()) == 0);
    }
}

TEST_CASE("kuenneth multiplicativity on pure tensors") {
    for (long long g1 = 0; g1 <= 4; ++g1)
        for (long long g2 = 0; g2 <= 4; ++g2)
            for (long long r1 = -2; r1 <= 2; ++r1)
                for (long long d1 = -2; d1 <= 2; ++d1)
                    for (long long r2 = -2; r2 <= 2; ++r2)
                        for (long long d2 = -2; d2 <= 2; ++d2) {
                            curve_class f1{r1, d1}, f2{1, d2}, h1{r2, -d1}, h2{0, 1};
                            Int lhs = product_chi(g1, g2, box_class(f1, f2), box_class(h1, h2));
                            Int rhs = curve_chi(g1, f1, h1) * curve_chi(g2, f2, h2);
                            REQUIRE(lhs == rhs);
                        }
}

TEST_CASE("product ring relations") {
    product_class a{0, 1, 0, 0}, b{0, 0, 1, 0};
    CHECK(product_mul(a, a) == product_class{0, 0, 0, 0});
    CHECK(product_mul(b, b) == product_class{0, 0, 0, 0});
    CHECK(product_mul(a, b) == product_class{0, 0, 0, 1});
    CHECK(product_chi(3, 4, product_one(), product_one()) == 2 * 3);
    /* point x point self-pairing dies on a^2 = 0 */
    CHECK(product_chi(3, 4, product_class{0, 0, 0, 1}, product_class{0, 0, 0, 1}) == 0);
}

TEST_CASE("ideal-point gluing pairing block") {
    std::vector<curve_class> basis = {structure_class(), point_class()};
    imat g = gluing_pairing(2, 3, ideal_point_class(), basis, basis);
    CHECK(g(0, 0) == 2 * 3 - 2 - 3);
    CHECK(g(1, 0) == 3 - 1);
    CHECK(g(1, 1) == -1);
    CHECK(g(0, 1) == 1 - 2);
    /* additivity in each argument */
    curve_class sum{1, 1};
    imat gs = gluing_pairing(2, 3, ideal_point_class(), {sum}, basis);
    CHECK(gs(0, 0) == g(0, 0) + g(1, 0));
    CHECK(gs(0, 1) == g(0, 1) + g(1, 1));
}

TEST_CASE("point gluing of the augmentation shape") {
    std::vector<curve_class> basis = {structure_class(), point_class()};
    CHECK(augmentation_gluing_pairing(5, structure_class(), basis) ==
          imat{{Int(-4), Int(1)}});
    /* gluing along a point class instead of the structure sheaf */
    CHECK(augmentation_gluing_pairing(5, point_class(), basis) == imat{{Int(1), Int(0)}});
}

TEST_CASE("extremal enumeration against the tableau oracle") {
    for (long long g = 1; g <= 20; ++g)
        for (const auto& e : bnp_enumerate(g)) {
            CHECK(e.degree == e.r - e.s + g - 1);
            CHECK(e.count == syt_rectangle(e.r, e.s));
        }
    CHECK(bnp_enumerate(0).empty());
}
