// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include <braidops/braid.hpp>
#include <braidops/commute.hpp>
#include <braidops/families.hpp>
#include <braidops/table.hpp>

namespace {

braidops::OperatorFamily mixed_case2(int n) {
    braidops::ParamSampler s(2024);
    const auto p = s.abcd();
    return braidops::main_case2(n, p.a, p.b, p.c, p.d, s.lines(n - 1));
}

void BM_FamilyCheck(benchmark::State& state) {
    const auto fam = mixed_case2(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(braidops::family_braid_check(fam));
}

void BM_FamilyCheckSerial(benchmark::State& state) {
    const auto fam = mixed_case2(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(braidops::family_braid_check_serial(fam));
}

void BM_Commute(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto a = braidops::preset_demazure(n);
    const auto b = braidops::main_case1(n, 1, 2, 1, 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(braidops::cross_family_commute(a, b));
}

void BM_CommuteSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto a = braidops::preset_demazure(n);
    const auto b = braidops::main_case1(n, 1, 2, 1, 2, 3);
    for (auto _ : state) benchmark::DoNotOptimize(braidops::cross_family_commute_serial(a, b));
}

void BM_Table(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto fam = braidops::preset_demazure(n);
    const auto seed = braidops::staircase(n);
    for (auto _ : state) benchmark::DoNotOptimize(braidops::polynomial_table(fam, seed));
}

void BM_TableSerial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const auto fam = braidops::preset_demazure(n);
    const auto seed = braidops::staircase(n);
    for (auto _ : state) benchmark::DoNotOptimize(braidops::polynomial_table_serial(fam, seed));
}

}  // namespace

BENCHMARK(BM_FamilyCheck)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FamilyCheckSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Commute)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CommuteSerial)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Table)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
