#include <benchmark/benchmark.h>

#include <random>

#include "locnil/classify.hpp"
#include "locnil/construct.hpp"
#include "locnil/oracle.hpp"

using namespace locnil;

namespace {

Mat random_invertible(const Field& f, unsigned n, std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> d(-9, 9);
  for (;;) {
    Mat m(f, n);
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        m.set(i, j, f.is_finite() ? FieldElem(f, rng() % f.size()) : f.from_int(d(rng)));
      }
    }
    if (m.is_invertible()) return m;
  }
}

const char* kFields[] = {"gf:7", "gf:3^2", "gf:101", "q"};

}  // namespace

static void BM_MatMul(benchmark::State& state) {
  auto f = make_field(kFields[state.range(0)]);
  const auto n = static_cast<unsigned>(state.range(1));
  std::mt19937_64 rng(1);
  const Mat a = random_invertible(*f, n, rng);
  const Mat b = random_invertible(*f, n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetLabel(f->descriptor());
}
BENCHMARK(BM_MatMul)->ArgsProduct({{0, 1, 2, 3}, {2, 3, 5}});

static void BM_Determinant(benchmark::State& state) {
  auto f = make_field(kFields[state.range(0)]);
  std::mt19937_64 rng(2);
  const Mat a = random_invertible(*f, 3, rng);
  for (auto _ : state) benchmark::DoNotOptimize(a.det());
  state.SetLabel(f->descriptor());
}
BENCHMARK(BM_Determinant)->DenseRange(0, 3);

static void BM_ClosureH1(benchmark::State& state) {
  auto f = make_field(state.range(0) == 3 ? "gf:7" : "gf:13");
  const auto q = static_cast<unsigned>(state.range(0));
  const MonomialData h = make_H_alpha(q, *f, f->one());
  std::uint64_t order = 0;
  for (auto _ : state) {
    MatGroup g(*f, q, h.group.generators(), true);
    order = g.order().value;
  }
  state.counters["order"] = static_cast<double>(order);
}
BENCHMARK(BM_ClosureH1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_LowerCentralSeries(benchmark::State& state) {
  auto f = make_field("gf:7");
  const MatGroup g = make_G_alpha_b(2, *f, f->from_int(-1), {f->one()}).group;
  for (auto _ : state) benchmark::DoNotOptimize(lower_central_series(g));
}
BENCHMARK(BM_LowerCentralSeries)->Unit(benchmark::kMicrosecond);

static void BM_MaximalityGL27(benchmark::State& state) {
  auto f = make_field("gf:7");
  const MatGroup g = make_G_alpha_b(2, *f, f->from_int(-1), {f->one()}).group;
  MaximalityOptions opt;
  opt.certificates = state.range(0) != 0;
  MaximalityResult r;
  for (auto _ : state) r = maximality_check(g, opt);
  state.counters["closures"] = static_cast<double>(r.closures);
  state.SetLabel(opt.certificates ? "certificates" : "closures only");
}
BENCHMARK(BM_MaximalityGL27)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond);

static void BM_ClassifyGF(benchmark::State& state) {
  auto f = make_field("gf:" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify(2, *f).reps.size());
}
BENCHMARK(BM_ClassifyGF)->Arg(3)->Arg(5)->Arg(11)->Unit(benchmark::kMillisecond);

static void BM_ConjugatorSearch(benchmark::State& state) {
  auto f = make_field("gf:11");
  const MatGroup g = make_G_alpha_b(2, *f, f->from_int(-1), {f->one()}).group;
  const Mat t = Mat::parse(*f, "1,2;3,5");
  std::vector<Mat> gens;
  for (const auto& x : g.generators()) gens.push_back(conjugate(t, x));
  const MatGroup h(*f, 2, gens, true);
  for (auto _ : state) benchmark::DoNotOptimize(conjugator_search(g, h));
}
BENCHMARK(BM_ConjugatorSearch)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
