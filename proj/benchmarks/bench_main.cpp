#include <benchmark/benchmark.h>

#include "treecalc/combinat/enumerate.hpp"
#include "treecalc/fqsym/fqsym.hpp"
#include "treecalc/identities/functional.hpp"
#include "treecalc/identities/hook.hpp"
#include "treecalc/wqsym/wqsym.hpp"

using namespace treecalc;

namespace {

void BM_Convolve(benchmark::State &state)
{
    const auto k = static_cast<std::size_t>(state.range(0));
    const Permutation a = Permutation::identity(k);
    const Permutation b = Permutation::identity(k).inverse();
    for (auto _ : state) {
        benchmark::DoNotOptimize(convolve(a, b));
    }
}
BENCHMARK(BM_Convolve)->DenseRange(2, 6);

void BM_FQSymProductOfX(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = x_element(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(product(x, x, n));
    }
}
BENCHMARK(BM_FQSymProductOfX)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_WQSymProduct(benchmark::State &state)
{
    const auto n = static_cast<int>(state.range(0));
    WQSymElement<Rational> x;
    for_each_packed_word(static_cast<std::size_t>(n), [&](const PackedWord &w) { x.add(w, Rational(1)); });
    for (auto _ : state) {
        benchmark::DoNotOptimize(product(x, x));
    }
}
BENCHMARK(BM_WQSymProduct)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_EnumerateBinaryTrees(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        std::size_t seen = 0;
        for_each_binary_tree(n, [&](const BinaryTree &) { ++seen; });
        benchmark::DoNotOptimize(seen);
    }
}
BENCHMARK(BM_EnumerateBinaryTrees)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_HookCount(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    std::vector<BinaryTree> trees;
    for_each_binary_tree(n, [&](const BinaryTree &t) { trees.push_back(t); });
    for (auto _ : state) {
        for (const auto &t : trees) {
            benchmark::DoNotOptimize(qhook_imaj(t));
        }
    }
}
BENCHMARK(BM_HookCount)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Postnikov(benchmark::State &state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(postnikov_check(n));
    }
}
BENCHMARK(BM_Postnikov)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
