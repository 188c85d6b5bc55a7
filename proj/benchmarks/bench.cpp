#include <benchmark/benchmark.h>

#include "lnd/catalog.hpp"
#include "lnd/ideals.hpp"
#include "lnd/maubach.hpp"
#include "lnd/parse.hpp"
#include "lnd/registry.hpp"
#include "lnd/runner.hpp"
#include "lnd/theorem.hpp"

using namespace lnd;

namespace {

void BM_PolyMultiply(benchmark::State& st) {
  auto ex = catalog::df5();
  Poly f5, f6;
  for (const auto& g : ex.algebra) {
    if (g.name == "f5") f5 = g.poly;
    if (g.name == "f6") f6 = g.poly;
  }
  for (auto _ : st) benchmark::DoNotOptimize(f5 * f6);
}
BENCHMARK(BM_PolyMultiply);

void BM_Theta(benchmark::State& st) {
  auto d = catalog::maubach_prime(static_cast<unsigned>(st.range(0)));
  Poly w = Poly::variable(d.ring(), "w");
  for (auto _ : st) benchmark::DoNotOptimize(theta(d, w));
}
BENCHMARK(BM_Theta)->DenseRange(1, 4);

void BM_RadicalEqual(benchmark::State& st) {
  auto r = catalog::f6().ring;
  Ideal a(r, {parse_poly(r, "x"), parse_poly(r, "2*x^3*y^3*t - y^6*s^2")});
  Ideal b(r, {parse_poly(r, "x"), parse_poly(r, "y*s")});
  for (auto _ : st) benchmark::DoNotOptimize(radical_equal(a, b));
}
BENCHMARK(BM_RadicalEqual);

void BM_Membership(benchmark::State& st) {
  auto ex = catalog::df5();
  Poly f3 = ex.algebra[2].poly;
  std::vector<NamedPoly> g{ex.algebra[0], ex.algebra[1], ex.algebra[3], ex.algebra[4]};
  for (auto _ : st) benchmark::DoNotOptimize(member(f3, SubalgebraPresentation(ex.ring, g)));
}
BENCHMARK(BM_Membership);

void BM_QuasiAffineRoberts(benchmark::State& st) {
  auto ex = catalog::roberts(static_cast<unsigned>(st.range(0)));
  std::vector<LocalSliceData> sl;
  for (const char* y : {"y1", "y2", "y3"}) sl.push_back(local_slice_data(ex.d, parse_poly(ex.ring, y)));
  for (auto _ : st)
    benchmark::DoNotOptimize(verify_quasi_affine(SubalgebraPresentation(ex.ring, ex.algebra), sl, ex.d));
}
BENCHMARK(BM_QuasiAffineRoberts)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_MaubachGenerators(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(maubach_generators(static_cast<unsigned>(st.range(0))));
}
BENCHMARK(BM_MaubachGenerators)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_RunCheckFile(benchmark::State& st) {
  auto f = dsl::builtin("new7", {{"a", 2}, {"b", 2}});
  for (auto _ : st) benchmark::DoNotOptimize(dsl::run(f));
}
BENCHMARK(BM_RunCheckFile)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
