#include <benchmark/benchmark.h>

#include "qgv/espace.hpp"
#include "qgv/hspace.hpp"
#include "qgv/qgauge.hpp"
#include "qgv/qsphere.hpp"

#include <random>

using namespace qgv;

static void BM_sphere_normal_form(benchmark::State& state) {
  SphereAlgebra sph = build_sphere();
  std::mt19937_64 rng(7);
  std::vector<Word> words;
  for (int t = 0; t < 64; ++t) {
    Word w;
    const int len = 2 + static_cast<int>(rng() % 6);
    for (int j = 0; j < len; ++j)
      w.push_back(static_cast<GenId>(rng() % sph.alg->gen_count()));
    words.push_back(std::move(w));
  }
  size_t i = 0;
  for (auto _ : state) {
    sph.alg->clear_memo();
    NCPoly p = sph.alg->normal_form(NCPoly::term(*sph.alg, QScalar(1), words[i % words.size()]));
    benchmark::DoNotOptimize(p);
    ++i;
  }
}
BENCHMARK(BM_sphere_normal_form);

static void BM_sphere_du_nilpotency(benchmark::State& state) {
  SphereAlgebra sph = build_sphere();
  for (auto _ : state) {
    NCPoly w = NCPoly::term(*sph.alg, QScalar(1),
                            Word{sph.u(1, +1), sph.u(2, -1), sph.theta(0), sph.u(1, -1)});
    NCPoly dd = sph.du.apply(sph.du.apply(w));
    benchmark::DoNotOptimize(dd);
  }
}
BENCHMARK(BM_sphere_du_nilpotency);

static void BM_instanton_curvature(benchmark::State& state) {
  GaugeAlgebra ga = build_qgauge();
  for (auto _ : state) {
    ga.alg->clear_memo();
    GaugeForm A = build_instanton(ga);
    GaugeForm F = curvature(ga, A);
    benchmark::DoNotOptimize(F);
  }
}
BENCHMARK(BM_instanton_curvature);

static void BM_instanton_asd(benchmark::State& state) {
  GaugeAlgebra ga = build_qgauge();
  GaugeForm A = build_instanton(ga);
  GaugeForm F = curvature(ga, A);
  for (auto _ : state) {
    AsdResult r = check_anti_self_dual(ga, F);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_instanton_asd);

static void BM_hspace_d1_square(benchmark::State& state) {
  HarmonicSpace hs = build_hspace();
  NCPoly d1 = hs.d1_op();
  NCPoly f = hs.alg->normal_form(hs.x_charged(1, +1) * hs.x_charged(2, +1));
  for (auto _ : state) {
    NCPoly r = hs.apply_op(d1, hs.apply_op(d1, f));
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_hspace_d1_square);

BENCHMARK_MAIN();
