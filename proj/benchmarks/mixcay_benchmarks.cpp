#include <benchmark/benchmark.h>

#include <random>

#include "mixcay/context.hpp"
#include "mixcay/enumerate.hpp"
#include "mixcay/hermitian_eigen.hpp"
#include "mixcay/spectra.hpp"

namespace mixcay {
namespace {

void BM_CharacterTable(benchmark::State& state, const char* spec) {
  const GroupSpec parsed = parse_group_spec(spec);
  for (auto _ : state) benchmark::DoNotOptimize(GroupContext::build(parsed));
}
BENCHMARK_CAPTURE(BM_CharacterTable, alternating_4, "alternating:4");
BENCHMARK_CAPTURE(BM_CharacterTable, dicyclic_6, "dicyclic:6");
BENCHMARK_CAPTURE(BM_CharacterTable, symmetric_5, "symmetric:5");
BENCHMARK_CAPTURE(BM_CharacterTable, cyclic_100, "cyclic:100");

void BM_EvaluatorSweep(benchmark::State& state, const char* spec) {
  const auto ctx = GroupContext::build(parse_group_spec(spec));
  const NormalSetEvaluator ev(ctx);
  std::size_t spectral = 0;
  for (auto _ : state) {
    ev.for_each(EnumerationMode::All, kDefaultEnumerationBound,
                [&](const NormalSetEvaluator::View& v) { spectral += ev.verdicts(v).spectral; });
  }
  benchmark::DoNotOptimize(spectral);
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(normal_set_count(ctx.classes)));
}
BENCHMARK_CAPTURE(BM_EvaluatorSweep, cyclic_16, "cyclic:16");
BENCHMARK_CAPTURE(BM_EvaluatorSweep, dihedral_8, "dihedral:8");

void BM_HermitianEigen(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::normal_distribution<double> dist;
  ComplexMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = dist(rng);
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = Complex(dist(rng), dist(rng));
      m(j, i) = std::conj(m(i, j));
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eigen(m, false));
}
BENCHMARK(BM_HermitianEigen)->Arg(12)->Arg(24)->Arg(60);

void BM_DirectVersusCharacters(benchmark::State& state) {
  const auto ctx = GroupContext::build(parse_group_spec("dicyclic:6"));
  const auto masks = enumerate_normal_sets(ctx.classes, EnumerationMode::MixedOnly);
  const ConnectionSet s(ctx.group, mask_to_set(ctx.classes, masks.back()));
  const bool direct = state.range(0) == 1;
  for (auto _ : state) {
    if (direct) {
      benchmark::DoNotOptimize(hs_spectrum_direct(build_h_matrix(ctx.group, s)));
    } else {
      benchmark::DoNotOptimize(hs_spectrum_by_characters(ctx.classes, ctx.characters, s));
    }
  }
}
BENCHMARK(BM_DirectVersusCharacters)->Arg(0)->Arg(1);

}  // namespace
}  // namespace mixcay

BENCHMARK_MAIN();
