#include <benchmark/benchmark.h>

#include "fgtk/measures.hpp"
#include "fgtk/stallings.hpp"
#include "fgtk/whitehead.hpp"

namespace {

// 24^3 = 13824 homomorphisms per enumeration; scaling across threads shows
// the cost of the merge step against the raw scan.
void BM_HomFingerprintS4(benchmark::State& state) {
  const fgtk::FiniteGroup group = fgtk::FiniteGroup::symmetric(4);
  const fgtk::WordTuple tuple = fgtk::parse_tuple({"abAB", "aabb"}, 3);
  fgtk::EnumerationOptions options;
  options.threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto fp = fgtk::hom_fingerprint(tuple, group, options);
    benchmark::DoNotOptimize(fp.total);
  }
}
BENCHMARK(BM_HomFingerprintS4)->Arg(1)->Arg(2)->Arg(4);

void BM_EpiDirect(benchmark::State& state) {
  const fgtk::FiniteGroup group = fgtk::FiniteGroup::alternating(4);
  const fgtk::WordTuple tuple = fgtk::parse_tuple({"ab", "ba"}, 2);
  for (auto _ : state) {
    auto fp = fgtk::epi_fingerprint_direct(tuple, group);
    benchmark::DoNotOptimize(fp.total);
  }
}
BENCHMARK(BM_EpiDirect);

void BM_EpiRecursive(benchmark::State& state) {
  const fgtk::FiniteGroup group = fgtk::FiniteGroup::alternating(4);
  const fgtk::WordTuple tuple = fgtk::parse_tuple({"ab", "ba"}, 2);
  for (auto _ : state) {
    auto fp = fgtk::epi_fingerprint_recursive(tuple, group);
    benchmark::DoNotOptimize(fp.total);
  }
}
BENCHMARK(BM_EpiRecursive);

void BM_StallingsBasis(benchmark::State& state) {
  const fgtk::WordTuple tuple =
      fgtk::parse_tuple({"abab", "baab", "aabbab", "abba", "bbaa"}, 2);
  for (auto _ : state) {
    auto graph = fgtk::StallingsGraph::build(tuple);
    auto basis = graph.basis();
    benchmark::DoNotOptimize(basis.size());
  }
}
BENCHMARK(BM_StallingsBasis);

void BM_WhiteheadMinimize(benchmark::State& state) {
  const fgtk::Endomorphism nudge =
      fgtk::Endomorphism({fgtk::Word::parse("ab", 2), fgtk::Word::parse("b", 2)});
  fgtk::Word seed = fgtk::Word::parse("abAB", 2);
  for (int i = 0; i < 4; ++i) seed = nudge.apply(seed);
  const fgtk::WordTuple tuple({seed}, 2);
  for (auto _ : state) {
    auto result = fgtk::whitehead_minimize(tuple);
    benchmark::DoNotOptimize(result.minimized.total_length());
  }
}
BENCHMARK(BM_WhiteheadMinimize);

void BM_SameOrbit(benchmark::State& state) {
  const fgtk::WordTuple left = fgtk::parse_tuple({"aabb"}, 2);
  const fgtk::WordTuple right = fgtk::parse_tuple({"abab"}, 2);
  for (auto _ : state) {
    auto verdict = fgtk::same_orbit(left, right);
    benchmark::DoNotOptimize(verdict.nodes_explored);
  }
}
BENCHMARK(BM_SameOrbit);

void BM_CharQuotientZ8(benchmark::State& state) {
  const fgtk::FiniteGroup group = fgtk::FiniteGroup::cyclic(8);
  for (auto _ : state) {
    auto quotient = fgtk::char_quotient(2, group);
    benchmark::DoNotOptimize(quotient.quotient.order());
  }
}
BENCHMARK(BM_CharQuotientZ8);

}  // namespace

BENCHMARK_MAIN();
