#include <benchmark/benchmark.h>

#include "sodlat/bnclassify.hpp"
#include "sodlat/families.hpp"
#include "sodlat/hochschild.hpp"
#include "sodlat/homcalc.hpp"
#include "sodlat/isometry.hpp"

namespace {

void bm_serre_analysis(benchmark::State& state) {
    sod::euler_lattice l = sod::augmented_lattice(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sod::serre_analysis(l));
}
BENCHMARK(bm_serre_analysis)->Arg(5)->Arg(40);

void bm_rpg_construction(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sod::rpg_lattice(state.range(0), state.range(0)));
}
BENCHMARK(bm_rpg_construction)->Arg(4)->Arg(20);

void bm_isometry_rpg_augmented(benchmark::State& state) {
    sod::euler_lattice a = sod::rpg_lattice(state.range(0), state.range(0));
    sod::euler_lattice b = sod::augmented_lattice(2 * state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sod::isometry_search(a, b, 10));
}
BENCHMARK(bm_isometry_rpg_augmented)->Arg(2)->Arg(4);

void bm_isometry_swap_rank4(benchmark::State& state) {
    long long g = state.range(0);
    std::vector<sod::curve_class> basis = {sod::structure_class(), sod::point_class()};
    sod::imat pairing = sod::gluing_pairing(g, g, sod::ideal_point_class(), basis, basis);
    sod::euler_lattice a =
        sod::glue_lattices(sod::curve_lattice(g, "1"), sod::curve_lattice(g, "2"), pairing);
    sod::euler_lattice b = sod::glue_lattices(sod::curve_lattice(g, "2"),
                                              sod::curve_lattice(g, "1"), pairing.transposed());
    for (auto _ : state) benchmark::DoNotOptimize(sod::isometry_search(a, b, 10));
}
BENCHMARK(bm_isometry_swap_rank4)->Arg(2)->Arg(3);

void bm_local_model_exotic(benchmark::State& state) {
    for (auto _ : state) {
        sod::ipg_model m = sod::ipg_local_model(state.range(0), state.range(0));
        benchmark::DoNotOptimize(sod::gluing_hom(m.model, m.exotic_triple(), m.exotic_triple()));
    }
}
BENCHMARK(bm_local_model_exotic)->Arg(2)->Arg(8);

void bm_classify_bn(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sod::classify_bn(state.range(0)));
}
BENCHMARK(bm_classify_bn)->Arg(12)->Arg(36);

}  // namespace

BENCHMARK_MAIN();
