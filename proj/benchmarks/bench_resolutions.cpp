#include <benchmark/benchmark.h>

#include <random>

#include "resolvent/resolutions.hpp"
#include "resolvent/towers.hpp"

using namespace resolvent;

namespace {

Complex random_complex(const Backend& b, std::mt19937_64& rng, int lo, int hi, int max_dim) {
  std::vector<Obj> objs;
  for (int n = lo; n <= hi; ++n) objs.push_back(random_obj(b, rng, max_dim));
  std::vector<Mor> diffs;
  for (int n = lo; n < hi; ++n) {
    if (n == lo) {
      diffs.push_back(random_mor(rng, objs[0], objs[1]));
      continue;
    }
    auto q = cokernel(diffs.back());
    diffs.push_back(compose(random_mor(rng, q.obj, objs[n + 1 - lo]), q.map));
  }
  return make_complex(b, lo, std::move(objs), std::move(diffs));
}

const Backend kNilp3{BackendKind::NilpMod, 3};

void bm_inj_res(benchmark::State& state) {
  fp::set_modulus(5);
  std::mt19937_64 rng(10);
  Complex x = random_complex(kNilp3, rng, -2, 2, (int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(inj_res_bounded_below(x, 4));
}

void bm_ce_tot(benchmark::State& state) {
  fp::set_modulus(5);
  std::mt19937_64 rng(11);
  Complex x = random_complex(kNilp3, rng, -1, 1, (int)state.range(0));
  for (auto _ : state) {
    auto ce = ce_resolution(x, 3);
    benchmark::DoNotOptimize(ce_tot(ce));
  }
}

void bm_kill(benchmark::State& state) {
  fp::set_modulus(5);
  std::mt19937_64 rng(12);
  Complex x = random_complex(kNilp3, rng, -2, 2, (int)state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kill_coboundaries(x, 0));
}

void bm_tower(benchmark::State& state) {
  fp::set_modulus(5);
  std::mt19937_64 rng(13);
  Complex x = random_complex(kNilp3, rng, -1, 1, 2);
  int levels = (int)state.range(0);
  for (auto _ : state) {
    auto tw = build_tower(x, levels, 2);
    benchmark::DoNotOptimize(finite_limit(tw));
  }
}

}  // namespace

BENCHMARK(bm_inj_res)->Arg(2)->Arg(4);
BENCHMARK(bm_ce_tot)->Arg(2)->Arg(3);
BENCHMARK(bm_kill)->Arg(2)->Arg(4);
BENCHMARK(bm_tower)->Arg(2)->Arg(4);

BENCHMARK_MAIN();
