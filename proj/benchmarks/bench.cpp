#include <benchmark/benchmark.h>

#include "mvspec/conrad.hpp"
#include "mvspec/literal.hpp"
#include "mvspec/localize.hpp"
#include "mvspec/spectrum.hpp"
#include "mvspec/verify.hpp"

using namespace mvspec;

namespace {

void oplus_window(benchmark::State& state, const char* signature) {
  const auto a = parse_algebra(signature);
  const auto xs = a->enumerate(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state)
    for (const auto& x : xs)
      for (const auto& y : xs) benchmark::DoNotOptimize(a->oplus(x, a->neg(y)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size() * xs.size()));
}
BENCHMARK_CAPTURE(oplus_window, lex2, "lex:2")->Arg(2)->Arg(4);
BENCHMARK_CAPTURE(oplus_window, product, "product[chain:3,chang]")->Arg(2)->Arg(4);

void generate_all_singletons(benchmark::State& state, const char* signature) {
  const auto a = parse_algebra(signature);
  const auto xs = a->enumerate(0);
  for (auto _ : state)
    for (const auto& x : xs) benchmark::DoNotOptimize(generate_filter(a, std::span<const Element>(&x, 1)));
}
BENCHMARK_CAPTURE(generate_all_singletons, chain7, "chain:7");
BENCHMARK_CAPTURE(generate_all_singletons, product, "product[chain:2,chain:3]");

void prime_spectrum(benchmark::State& state, const char* signature) {
  const auto a = parse_algebra(signature);
  for (auto _ : state) benchmark::DoNotOptimize(spectrum(a, SpectrumKind::prime));
}
BENCHMARK_CAPTURE(prime_spectrum, lex3, "lex:3");
BENCHMARK_CAPTURE(prime_spectrum, product, "product[chang,lex:2]");

void conrad(benchmark::State& state, const char* signature) {
  const auto a = parse_algebra(signature);
  for (auto _ : state) benchmark::DoNotOptimize(conrad_filter(a));
}
BENCHMARK_CAPTURE(conrad, lex3, "lex:3");
BENCHMARK_CAPTURE(conrad, product, "product[chain:2,chain:3]");

void finite_quotient(benchmark::State& state) {
  const auto a = parse_algebra("product[chain:2,chain:3]");
  const Filter f = parse_filter(a, "pull{1;one}");
  for (auto _ : state) benchmark::DoNotOptimize(quotient(f));
}
BENCHMARK(finite_quotient);

void localize_lex(benchmark::State& state) {
  const auto a = parse_algebra("lex:2");
  const Filter p = parse_filter(a, "m{1}");
  for (auto _ : state) benchmark::DoNotOptimize(localize(p, 3));
}
BENCHMARK(localize_lex);

void verify_lex2(benchmark::State& state) {
  const auto a = parse_algebra("lex:2");
  for (auto _ : state) benchmark::DoNotOptimize(verify_all(a, 2));
}
BENCHMARK(verify_lex2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
