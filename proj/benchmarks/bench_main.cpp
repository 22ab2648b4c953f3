#include <benchmark/benchmark.h>

#include "graphcx/complex.hpp"
#include "graphcx/graph.hpp"
#include "graphcx/state_sum.hpp"
#include "graphcx/zoo.hpp"

namespace {

using namespace graphcx;

void BM_canonicalize_k4(benchmark::State& state) {
  const OrientedGraph g = graph_from_id("O4:0-1,0-2,0-3,1-2,1-3,2-3");
  const OrientedGraph scrambled = relabel_vertices(flip_arrow(g, 2), {2, 0, 3, 1});
  for (auto _ : state) benchmark::DoNotOptimize(canonicalize(scrambled));
}
BENCHMARK(BM_canonicalize_k4);

void BM_enumerate_ordinary(benchmark::State& state) {
  const int chi = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ordinary(chi, -3 * chi));
}
BENCHMARK(BM_enumerate_ordinary)->Arg(-1)->Arg(-2)->Arg(-3)->Unit(benchmark::kMillisecond);

void BM_enumerate_ribbon(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ribbon(1, 2, 6));
}
BENCHMARK(BM_enumerate_ribbon)->Unit(benchmark::kMillisecond);

void BM_partition_value_so3_k4(benchmark::State& state) {
  const auto spec = zoo("so3");
  const OrientedGraph g = graph_from_id("O4:0-1,0-2,0-3,1-2,1-3,2-3");
  for (auto _ : state) benchmark::DoNotOptimize(partition_value(g, spec));
}
BENCHMARK(BM_partition_value_so3_k4);

void BM_partition_value_m2k_theta(benchmark::State& state) {
  const auto spec = zoo("m2k");
  const OrientedGraph g = graph_from_id("R:0,1,3/2,5,4:0-2,1-4,3-5");
  for (auto _ : state) benchmark::DoNotOptimize(partition_value(g, spec));
}
BENCHMARK(BM_partition_value_m2k_theta);

void BM_boundary_matrix(benchmark::State& state) {
  const auto params = ComplexParams::ordinary(-3);
  const int e = static_cast<int>(state.range(0));
  graphs_at(params, e);
  graphs_at(params, e - 1);
  for (auto _ : state) benchmark::DoNotOptimize(boundary_matrix(params, e));
}
BENCHMARK(BM_boundary_matrix)->Arg(7)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
