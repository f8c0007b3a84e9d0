#include <benchmark/benchmark.h>

#include "akizuki/completion.hpp"
#include "akizuki/duality.hpp"
#include "akizuki/expression.hpp"
#include "akizuki/random.hpp"

using namespace akizuki;

namespace {

Field field_for(std::int64_t id) { return id == 0 ? Field::rationals() : Field::prime(1000003); }

void BM_SeriesMul(benchmark::State& state) {
  const auto f = field_for(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rng = random::case_engine(1, 1, 0);
  const auto a = random::series(rng, f, n, 80);
  const auto b = random::series(rng, f, n, 80);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->ArgsProduct({{31, 63, 127}, {0, 1}});

void BM_SeriesInvert(benchmark::State& state) {
  const auto f = field_for(state.range(1));
  const auto n = static_cast<std::size_t>(state.range(0));
  auto rng = random::case_engine(1, 2, 0);
  const auto a = random::unit_series(rng, f, n, 80);
  for (auto _ : state) benchmark::DoNotOptimize(invert(a));
}
BENCHMARK(BM_SeriesInvert)->ArgsProduct({{31, 63, 127}, {0, 1}});

void BM_NormalFormMul(benchmark::State& state) {
  const auto f = field_for(state.range(0));
  const auto inst = AkizukiInstance::make_default(f);
  auto rng = random::case_engine(1, 3, 0);
  const auto a = random::normal_form(rng, f, 31);
  const auto b = random::normal_form(rng, f, 31);
  for (auto _ : state) benchmark::DoNotOptimize(nf_mul(inst, a, b));
}
BENCHMARK(BM_NormalFormMul)->Arg(0)->Arg(1);

void BM_EvalExpression(benchmark::State& state) {
  const auto inst = AkizukiInstance::make_default();
  const auto e = parse_expression("(1 + g0*w - 3*g2)/(1 - t*w + g1) * (w + t^2)^3");
  for (auto _ : state) benchmark::DoNotOptimize(eval_expression(inst, e, 31));
}
BENCHMARK(BM_EvalExpression);

void BM_Phi(benchmark::State& state) {
  const auto f = field_for(state.range(0));
  const auto inst = AkizukiInstance::make_default(f);
  auto rng = random::case_engine(1, 4, 0);
  const auto p = random::pair(rng, f, 31, true);
  const auto omega = H1Class::make(random::normal_form(rng, f, 30), 30);
  for (auto _ : state) benchmark::DoNotOptimize(phi(inst, p, omega));
}
BENCHMARK(BM_Phi)->Arg(0)->Arg(1);

void BM_PhiInverse(benchmark::State& state) {
  const auto f = field_for(state.range(0));
  const auto inst = AkizukiInstance::make_default(f);
  auto rng = random::case_engine(1, 5, 0);
  const auto p = random::pair(rng, f, 31, true);
  const auto h = ContinuousHom::make(random::unit_series(rng, f, 30), random::series(rng, f, 30));
  for (auto _ : state) benchmark::DoNotOptimize(phi_inverse(inst, p, h));
}
BENCHMARK(BM_PhiInverse)->Arg(0)->Arg(1);

void BM_CompMul(benchmark::State& state) {
  const auto inst = AkizukiInstance::make_default();
  auto rng = random::case_engine(1, 6, 0);
  const auto u = random::completion_element(rng, inst.field(), 31);
  const auto v = random::completion_element(rng, inst.field(), 31);
  for (auto _ : state) benchmark::DoNotOptimize(comp_mul(inst, u, v));
}
BENCHMARK(BM_CompMul);

void BM_CompMulGeneral(benchmark::State& state) {
  const auto inst = AkizukiInstance::make_default();
  auto rng = random::case_engine(1, 7, 0);
  const auto u = random::completion_element(rng, inst.field(), 31);
  const auto v = random::completion_element(rng, inst.field(), 31);
  const CompletionElement unit(random::unit_series(rng, inst.field(), 31), random::series(rng, inst.field(), 31));
  for (auto _ : state) benchmark::DoNotOptimize(comp_mul_general(inst, u, v, unit));
}
BENCHMARK(BM_CompMulGeneral);

}  // namespace

BENCHMARK_MAIN();
