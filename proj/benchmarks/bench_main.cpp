#include <benchmark/benchmark.h>

#include "plh/cvgraph.hpp"
#include "plh/higman.hpp"
#include "plh/ring.hpp"

using namespace plh;

namespace {

LineMap bumps(int n) {
  LineMap f;
  for (int i = 0; i < n; ++i) f = compose(f, make_bump(Rat(i, 5), Rat(i, 5) + Rat(3, 7)));
  return f;
}

void BM_ComposeLine(benchmark::State& state) {
  const LineMap f = bumps(static_cast<int>(state.range(0)));
  const LineMap g = invert(bumps(static_cast<int>(state.range(0)) + 1));
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_ComposeLine)->Arg(4)->Arg(16)->Arg(64);

void BM_SupportLine(benchmark::State& state) {
  const LineMap f = bumps(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(support(f));
}
BENCHMARK(BM_SupportLine)->Arg(4)->Arg(16)->Arg(64);

void BM_ComposeCircle(benchmark::State& state) {
  const RingSystem ring = make_standard_ring5();
  const CircleMap f = build_rprime(ring, 1).map;
  const CircleMap g = build_rprime(ring, 3).map;
  for (auto _ : state) benchmark::DoNotOptimize(compose(f, g));
}
BENCHMARK(BM_ComposeCircle);

void BM_VerifyArLemma(benchmark::State& state) {
  const RingSystem ring = make_standard_ring5();
  for (auto _ : state) benchmark::DoNotOptimize(verify_ar_lemma(ring));
}
BENCHMARK(BM_VerifyArLemma)->Unit(benchmark::kMillisecond);

void BM_CvCriterion(benchmark::State& state) {
  const StandardCV cv = standard_cv_witnesses(make_standard_ring5());
  for (auto _ : state) benchmark::DoNotOptimize(check_cv_criterion(cv.env, cv.s, cv.witnesses));
}
BENCHMARK(BM_CvCriterion)->Unit(benchmark::kMillisecond);

void BM_SearchHigman(benchmark::State& state) {
  const StandardCV cv = standard_cv_witnesses(make_standard_ring5());
  const Word g = Word::parse("r5");
  for (auto _ : state)
    benchmark::DoNotOptimize(search_higman(cv.env, cv.env.names(), "rp1", "rp3", g, state.range(0)));
}
BENCHMARK(BM_SearchHigman)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_CoMove(benchmark::State& state) {
  const RingSystem ring = make_standard_ring5();
  const GenAssignment env = ring.assignment();
  const std::vector<ClosedPiece> k{{Rat(5, 2), Rat(11, 4)}};
  const Interval j(ExtRat(Rat(3)), ExtRat(Rat(4)));
  for (auto _ : state) benchmark::DoNotOptimize(co_move(env, env.names(), k, j, 2));
}
BENCHMARK(BM_CoMove)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
