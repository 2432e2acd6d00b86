#include <benchmark/benchmark.h>

#include "orthoglide/kinematics.hpp"
#include "orthoglide/kinetostatics.hpp"
#include "orthoglide/synthesis.hpp"
#include "orthoglide/workspace.hpp"

namespace {

using namespace orthoglide;

const MechanismGeometry g = synthesize({200.0, 2.0, 0.0});

void BM_InverseKinematics(benchmark::State& state) {
  Vec3 p{40.0, -20.0, 65.0};
  for (auto _ : state) benchmark::DoNotOptimize(inverse_kinematics(g, p));
}
BENCHMARK(BM_InverseKinematics);

void BM_ForwardKinematics(benchmark::State& state) {
  auto rho = inverse_kinematics(g, {40.0, -20.0, 65.0});
  for (auto _ : state) benchmark::DoNotOptimize(forward_kinematics(g, rho));
}
BENCHMARK(BM_ForwardKinematics);

void BM_Transmission(benchmark::State& state) {
  Vec3 p{40.0, -20.0, 65.0};
  for (auto _ : state) benchmark::DoNotOptimize(transmission(g, p));
}
BENCHMARK(BM_Transmission);

void BM_Synthesize(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(synthesize({200.0, 2.0, 0.0}));
}
BENCHMARK(BM_Synthesize);

void BM_VerifyExtremality(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_extremality(g, 2.0, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_VerifyExtremality)->Arg(11)->Arg(21);

void BM_FieldMap(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(field_map(g, Axis::Z, g.q1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FieldMap)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
