/*
   Copyright 2026 The ore-diamond Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include "ore/diamond.hpp"
#include "ore/oracle.hpp"
#include "ore/parser_io.hpp"
#include "random.hpp"

using namespace ore;

namespace {

const char* reference = "(1+X+theta+X*theta^2)*(1-X+X*theta)";

void BM_skew_mul(benchmark::State& state) {
    const int deg = static_cast<int>(state.range(0));
    testing::Gen gen(1);
    Scalar q = Field::finite(7).from_int(3);
    SkewPoly a = gen.nonzero_skew(q, deg, 2), b = gen.nonzero_skew(q, deg, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_skew_mul)->Arg(2)->Arg(4)->Arg(8);

void BM_skew_mul_symbolic(benchmark::State& state) {
    auto cfg = FieldConfig::symbolic(0);
    SkewPoly v = parse_skew("1+X+theta+X*theta^2", cfg), w = parse_skew("1-X+X*theta", cfg);
    for (auto _ : state) benchmark::DoNotOptimize(v * w);
}
BENCHMARK(BM_skew_mul_symbolic);

void BM_right_divide(benchmark::State& state) {
    const int deg = static_cast<int>(state.range(0));
    testing::Gen gen(2);
    const Field& f = state.range(1) ? Field::rationals() : Field::finite(7);
    Scalar q = f.from_int(f.is_finite() ? 3 : 2);
    SkewPoly a = gen.nonzero_skew(q, 2 * deg, 1), b = gen.nonzero_skew(q, deg, 1);
    for (auto _ : state) benchmark::DoNotOptimize(right_divide(a, b));
    state.SetLabel(f.name());
}
BENCHMARK(BM_right_divide)->Args({2, 0})->Args({4, 0})->Args({2, 1})->Args({4, 1});

void BM_gcrd(benchmark::State& state) {
    testing::Gen gen(3);
    Scalar q = Field::finite(11).from_int(2);
    SkewPoly d = gen.nonzero_skew(q, 2, 2);
    SkewPoly a = gen.nonzero_skew(q, 2, 2) * d, b = gen.nonzero_skew(q, 2, 2) * d;
    for (auto _ : state) benchmark::DoNotOptimize(gcrd(a, b));
}
BENCHMARK(BM_gcrd);

void BM_solve_master_modular(benchmark::State& state) {
    const auto p = static_cast<std::uint32_t>(state.range(0));
    auto cfg = FieldConfig::prime(p, 2);
    auto m = eliminate_left_B1(parse_skew(reference, cfg)).master;
    CheckConfig cc;
    cc.degree_bound = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(solve_master(m, cc));
}
BENCHMARK(BM_solve_master_modular)->Args({13, 2})->Args({23, 2})->Args({23, 4})->Unit(benchmark::kMillisecond);

void BM_check_over_Q(benchmark::State& state) {
    auto cfg = FieldConfig::rationals(2);
    SkewPoly c = parse_skew("1+X+theta+X*theta^2", cfg), b = parse_skew("1-X+X*theta", cfg);
    CheckConfig cc;
    cc.degree_bound = 2;
    cc.primes = {11, 13, 19, 23};
    cc.threads = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(check_monoid_commutativity(c, b, cc));
}
BENCHMARK(BM_check_over_Q)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_oracle(benchmark::State& state) {
    const auto p = static_cast<std::uint32_t>(state.range(0));
    SkewPoly h = parse_skew(reference, FieldConfig::prime(p, 2));
    const auto prec = static_cast<std::size_t>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(truncated_oracle(h, Shape::left_B1, prec, 3));
}
BENCHMARK(BM_oracle)->Args({13, 8})->Args({13, 12})->Args({23, 12})->Unit(benchmark::kMillisecond);

void BM_parse(benchmark::State& state) {
    auto cfg = FieldConfig::symbolic(0);
    for (auto _ : state) benchmark::DoNotOptimize(parse_skew(reference, cfg));
}
BENCHMARK(BM_parse);

}  // namespace

BENCHMARK_MAIN();
