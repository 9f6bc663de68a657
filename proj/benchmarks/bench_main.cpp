#include <benchmark/benchmark.h>

#include "kltan/hecke.hpp"
#include "kltan/subword.hpp"
#include "kltan/tangent.hpp"
#include "kltan/weyl.hpp"

namespace {

using namespace kltan;

const char* const kTypes[] = {"A3", "B3", "D4", "F4", "E6"};

RootSystem system_at(const benchmark::State& state) {
  return RootSystem(CartanType::parse(kTypes[state.range(0)]));
}

void label(benchmark::State& state) { state.SetLabel(kTypes[state.range(0)]); }

void BM_DemazureProduct(benchmark::State& state) {
  const auto rs = system_at(state);
  std::vector<int> letters;
  for (int k = 0; k < 40; ++k) letters.push_back(1 + (k * 7 + k / 3) % rs.rank());
  const Word q(std::move(letters));
  for (auto _ : state) benchmark::DoNotOptimize(demazure_product(rs, q));
  label(state);
}
BENCHMARK(BM_DemazureProduct)->DenseRange(0, 4);

void BM_BruhatLongestVsCoxeter(benchmark::State& state) {
  const auto rs = system_at(state);
  std::vector<int> cox;
  for (int i = 1; i <= rs.rank(); ++i) cox.push_back(i);
  const auto u = word_to_element(rs, Word(cox));
  const auto v = longest_element(rs);
  for (auto _ : state) benchmark::DoNotOptimize(bruhat_leq(rs, u, v));
  label(state);
}
BENCHMARK(BM_BruhatLongestVsCoxeter)->DenseRange(0, 4);

// x is a reduced word of length about 10, w the Demazure product of its odd letters.
std::pair<Word, WeylElement> sample_pair(const RootSystem& rs) {
  WeylElement x = identity_element(rs);
  std::vector<int> letters;
  for (int k = 0; letters.size() < 10 && k < 200; ++k) {
    const int i = 1 + (k * 5 + 2) % rs.rank();
    if (x.has_right_descent(i)) continue;
    x = times_simple(rs, x, i);
    letters.push_back(i);
  }
  const Word s(std::move(letters));
  std::vector<int> odd;
  for (std::size_t k = 0; k < s.size(); k += 2) odd.push_back(s[k]);
  return {s, demazure_product(rs, Word(std::move(odd))).delta};
}

void BM_TangentReport(benchmark::State& state) {
  const auto rs = system_at(state);
  const auto [s, w] = sample_pair(rs);
  const auto x = word_to_element(rs, s);
  for (auto _ : state) benchmark::DoNotOptimize(kl_tangent_report(rs, w, x, {.cone_coefficients = false}));
  label(state);
}
BENCHMARK(BM_TangentReport)->DenseRange(0, 4);

void BM_GrahamWillemsClass(benchmark::State& state) {
  const auto rs = system_at(state);
  const auto [s, w] = sample_pair(rs);
  for (auto _ : state) benchmark::DoNotOptimize(graham_willems_class(rs, w, s));
  label(state);
}
BENCHMARK(BM_GrahamWillemsClass)->DenseRange(0, 4);

void BM_EnumerateWeylGroup(benchmark::State& state) {
  const auto rs = system_at(state);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_weyl_group(rs));
  label(state);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(weyl_group_order(rs.cartan_type())));
}
BENCHMARK(BM_EnumerateWeylGroup)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
