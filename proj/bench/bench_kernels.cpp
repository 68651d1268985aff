// Serial reference vs OpenMP kernels. Arg 0 runs the serial reference where one
// exists (otherwise Mode::Serial); Arg n > 0 runs the parallel kernel on n threads.

#include <benchmark/benchmark.h>

#include <random>

#include "homleib/homology.hpp"
#include "homleib/instances.hpp"
#include "homleib/parallel.hpp"
#include "homleib/tensor.hpp"

using namespace hlb;
namespace I = hlb::instances;

namespace {

Matrix random_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto f = FieldSpec::rationals();
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng() % 3) m(r, c) = Scalar(f, static_cast<long>(rng() % 9) - 4, 1 + static_cast<long>(rng() % 2));
  return m;
}

par::Mode mode_for(int threads) { return threads == 0 ? par::Mode::Serial : par::Mode::Parallel; }

void BM_Rref(benchmark::State& state) {
  const Matrix m = random_matrix(60, 60, 1);
  const int threads = static_cast<int>(state.range(0));
  par::ModeGuard g(mode_for(threads), threads);
  for (auto _ : state) benchmark::DoNotOptimize(threads == 0 ? rref_reference(m) : rref(m));
}
BENCHMARK(BM_Rref)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Boundary(benchmark::State& state) {
  const auto c = adjoint_corep(I::sl2());
  const int threads = static_cast<int>(state.range(0));
  par::ModeGuard g(mode_for(threads), threads);
  for (auto _ : state)
    benchmark::DoNotOptimize(threads == 0 ? boundary_matrix_reference(c, 4) : boundary_matrix(c, 4));
}
BENCHMARK(BM_Boundary)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TensorRelations(benchmark::State& state) {
  const auto ma = adjoint_mutual(I::sl2_sum());
  const int threads = static_cast<int>(state.range(0));
  par::ModeGuard g(mode_for(threads), threads);
  for (auto _ : state) benchmark::DoNotOptimize(tensor_relations(ma));
}
BENCHMARK(BM_TensorRelations)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Echelon(benchmark::State& state) {
  const auto rels = tensor_relations(adjoint_mutual(I::sl2_sum()));
  const auto n = 2 * 6 * 6;
  const int threads = static_cast<int>(state.range(0));
  par::ModeGuard g(mode_for(threads), threads);
  for (auto _ : state) {
    EchelonBuilder b(FieldSpec::rationals(), n);
    benchmark::DoNotOptimize(threads == 0 ? b.add_all_serial(rels) : b.add_all(rels));
  }
}
BENCHMARK(BM_Echelon)->Arg(0)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
