#include <benchmark/benchmark.h>

#include <random>

#include "resolvent/linalg.hpp"

using namespace resolvent;

namespace {

Matrix random_matrix(std::mt19937_64& rng, int r, int c) {
  Matrix m(r, c);
  std::uniform_int_distribution<int> d(0, (int)fp::modulus() - 1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.set(i, j, d(rng));
  return m;
}

void bm_matmul(benchmark::State& state) {
  fp::set_modulus(5);
  std::mt19937_64 rng(1);
  int n = (int)state.range(0);
  Matrix a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}

void bm_rref(benchmark::State& state) {
  fp::set_modulus(5);
  std::mt19937_64 rng(2);
  int n = (int)state.range(0);
  Matrix a = random_matrix(rng, n, 2 * n);
  for (auto _ : state) benchmark::DoNotOptimize(rref(a));
}

void bm_solve(benchmark::State& state) {
  fp::set_modulus(5);
  std::mt19937_64 rng(3);
  int n = (int)state.range(0);
  Matrix a = random_matrix(rng, n, n);
  Matrix x = random_matrix(rng, n, 1);
  Matrix b = a * x;
  for (auto _ : state) benchmark::DoNotOptimize(solve(a, b));
}

}  // namespace

BENCHMARK(bm_matmul)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(bm_rref)->Arg(8)->Arg(32)->Arg(64);
BENCHMARK(bm_solve)->Arg(8)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
