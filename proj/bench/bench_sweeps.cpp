// Serial reference against the OpenMP sweep on the corpus-level kernels.
#include <benchmark/benchmark.h>

#include "goedel/deviant.hpp"
#include "goedel/generate.hpp"
#include "goedel/parallel.hpp"
#include "goedel/standard.hpp"

namespace {

using namespace goedel;

const std::vector<Expr>& sentences() {
  static const auto s = fragment_sentences(300, 7);
  return s;
}

const std::vector<Expr>& terms() {
  static const auto t = [] {
    std::vector<Expr> out;
    for (const auto& [a, b] : random_term_pairs(200, 11, 5, 3)) {
      out.push_back(a);
      out.push_back(b);
    }
    return out;
  }();
  return t;
}

void BM_classify(benchmark::State& st) {
  Exec exec = st.range(0) ? Exec::Parallel : Exec::Serial;
  Oracle oracle;
  sentences();  // generated once, outside the timing
  for (auto _ : st) benchmark::DoNotOptimize(classify_all(oracle, sentences(), exec));
  st.SetLabel(exec == Exec::Parallel ? "parallel" : "serial");
}

void BM_normalize(benchmark::State& st) {
  Exec exec = st.range(0) ? Exec::Parallel : Exec::Serial;
  terms();
  for (auto _ : st) benchmark::DoNotOptimize(normalize_all(terms(), exec));
  st.SetLabel(exec == Exec::Parallel ? "parallel" : "serial");
}

void BM_encode_delta_neg(benchmark::State& st) {
  Exec exec = st.range(0) ? Exec::Parallel : Exec::Serial;
  Numbering n = delta_neg();
  for (auto _ : st) benchmark::DoNotOptimize(encode_all(n, sentences(), exec));
  st.SetLabel(exec == Exec::Parallel ? "parallel" : "serial");
}

void BM_encode_gamma(benchmark::State& st) {
  Exec exec = st.range(0) ? Exec::Parallel : Exec::Serial;
  Numbering n = standard_gamma();
  for (auto _ : st) benchmark::DoNotOptimize(encode_all(n, sentences(), exec));
  st.SetLabel(exec == Exec::Parallel ? "parallel" : "serial");
}

BENCHMARK(BM_classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_normalize)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_encode_delta_neg)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_encode_gamma)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
