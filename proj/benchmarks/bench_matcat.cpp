#include <benchmark/benchmark.h>

#include "matcat/bialgebra.hpp"
#include "matcat/sampling.hpp"

using namespace matcat;

namespace {

const BaseCategory kBase{2, Instance::graded};

void BM_CantorRoundtrip(benchmark::State& state) {
  Nat z("987654321987654321987654321");
  for (auto _ : state) {
    auto [x, y] = cantor_unpair(z);
    benchmark::DoNotOptimize(cantor_pair(x, y));
  }
}
BENCHMARK(BM_CantorRoundtrip);

void BM_GradedTensorCompose(benchmark::State& state) {
  Rng rng(1);
  const SampleBounds bounds{2, 2, 2};
  const GradedObject a = GradedObject::from_grades({{-1, 2}, {0, 2}, {1, 2}});
  const GradedMorphism f = sample_morphism(rng, a, a);
  const GradedMorphism g = sample_morphism(rng, a, a);
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(tensor(f, g), tensor(g, f)));
  }
}
BENCHMARK(BM_GradedTensorCompose);

void BM_BigGamma(benchmark::State& state) {
  const GradedObject x = GradedObject::from_slots({-1, 1});
  const GradedObject y = GradedObject::from_slots({0, 2});
  for (auto _ : state) {
    benchmark::DoNotOptimize(big_gamma(kBase, x, y));
  }
}
BENCHMARK(BM_BigGamma);

void BM_CoherenceNormalize(benchmark::State& state) {
  const MatObject f = MatObject::singleton(Nat(2), GradedObject::line(1, 1));
  const TensorWord wf = TensorWord::leaf(f);
  const TensorWord src = TensorWord::node(
      TensorWord::node(wf, TensorWord::node(wf, TensorWord::unit())),
      TensorWord::node(wf, TensorWord::node(wf, wf)));
  const TensorWord dst = TensorWord::node(
      wf, TensorWord::node(
              wf, TensorWord::node(wf, TensorWord::node(wf, wf))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(coherence_iso(src, dst));
  }
}
BENCHMARK(BM_CoherenceNormalize);

void BM_MuHatRow(benchmark::State& state) {
  const Bialgebra bi = make_bialgebra(kBase);
  const Nat a = encode_object(GradedObject::from_slots({-1, 1}));
  const Nat d = cantor_pair(a, a);
  const Nat row = cantor_pair(cantor_pair(d, d), cantor_pair(d, d));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bi.mu_hat.mor.row(row));
  }
}
BENCHMARK(BM_MuHatRow);

}  // namespace

BENCHMARK_MAIN();
