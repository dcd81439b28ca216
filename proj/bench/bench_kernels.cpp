#include <random>

#include <benchmark/benchmark.h>

#include "tannakit/exactlin/kernels.hpp"

using namespace tannakit::exactlin;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, Field f, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
  Matrix m(rows, cols, f);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const long d = f.is_rational() ? den(rng) : 1;
      m.set(i, j, Scalar(num(rng), d));
    }
  return m;
}

Field field_arg(const benchmark::State& state) {
  return state.range(1) == 0 ? Field::rationals() : Field::prime(kDefaultPrime);
}

template <RrefResult (*Rref)(Matrix)>
void BM_rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix m = random_matrix(n, n + 8, field_arg(state), 1);
  for (auto _ : state) benchmark::DoNotOptimize(Rref(m));
}

template <Matrix (*Kron)(const Matrix&, const Matrix&)>
void BM_kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, field_arg(state), 2), b = random_matrix(n, n, field_arg(state), 3);
  for (auto _ : state) benchmark::DoNotOptimize(Kron(a, b));
}

template <Matrix (*Multiply)(const Matrix&, const Matrix&)>
void BM_multiply(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(n, n, field_arg(state), 4), b = random_matrix(n, n, field_arg(state), 5);
  for (auto _ : state) benchmark::DoNotOptimize(Multiply(a, b));
}

void sizes(benchmark::internal::Benchmark* b, std::initializer_list<long> ns) {
  for (long field : {0, 1})
    for (long n : ns) b->Args({n, field});
  b->ArgNames({"n", "fp"})->Unit(benchmark::kMillisecond)->UseRealTime();
}

}  // namespace

BENCHMARK(BM_rref<rref>)->Apply([](auto* b) { sizes(b, {16, 32, 64}); });
BENCHMARK(BM_rref<reference::rref>)->Apply([](auto* b) { sizes(b, {16, 32, 64}); });
BENCHMARK(BM_kron<kron>)->Apply([](auto* b) { sizes(b, {8, 16}); });
BENCHMARK(BM_kron<reference::kron>)->Apply([](auto* b) { sizes(b, {8, 16}); });
BENCHMARK(BM_multiply<multiply>)->Apply([](auto* b) { sizes(b, {32, 64}); });
BENCHMARK(BM_multiply<reference::multiply>)->Apply([](auto* b) { sizes(b, {32, 64}); });

int main(int argc, char** argv) {
  set_max_threads_from_env();
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
