// SPDX-License-Identifier: Apache-2.0
//
// Serial reference versus OpenMP kernels on a 784 -> 128 -> 128 -> 10 relu
// net. Arguments are the batch size. Set OMP_NUM_THREADS to compare scaling.

#include <benchmark/benchmark.h>

#include <numeric>
#include <vector>

#include "gcx/data.hpp"
#include "gcx/kernels.hpp"
#include "gcx/net.hpp"

namespace {

using namespace gcx;

struct Fixture {
  Network net = init_network(mlp_specs(784, 128, 2, 10), InitScheme::standard, 0);
  Dataset ds;
  std::vector<std::size_t> idx;

  explicit Fixture(std::size_t n) {
    ds = make_blobs(n, 10, 784, 4.0, 1);
    idx.resize(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
  }
};

void BM_LossGradientSerial(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(serial::batch_loss_gradient(f.net, LossKind::softmax_ce, f.ds, f.idx));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LossGradientParallel(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(batch_loss_gradient(f.net, LossKind::softmax_ce, f.ds, f.idx));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_JacobianNormsSerial(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::jacobian_norms_sq(f.net, f.ds.features));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_JacobianNormsParallel(benchmark::State& state) {
  Fixture f(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_norms_sq(f.net, f.ds.features));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_LossGradientSerial)->Arg(64)->Arg(512);
BENCHMARK(BM_LossGradientParallel)->Arg(64)->Arg(512);
BENCHMARK(BM_JacobianNormsSerial)->Arg(64)->Arg(256);
BENCHMARK(BM_JacobianNormsParallel)->Arg(64)->Arg(256);

BENCHMARK_MAIN();
