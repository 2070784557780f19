#include <benchmark/benchmark.h>

#include <random>

#include "linkhom/config_space.hpp"
#include "linkhom/invariants.hpp"
#include "linkhom/script_gen.hpp"

using namespace linkhom;

namespace {

LinkDiagram contractible_pair() {
  Component inner{{{Rat(1, 5), Rat(9, 20)},
                   {Rat(1, 2), Rat(9, 20)},
                   {Rat(4, 5), Rat(9, 20)},
                   {Rat(4, 5), Rat(3, 4)},
                   {Rat(1, 5), Rat(3, 4)}},
                  GroupElement::identity(GroupId::klein),
                  {+2, +2, -1, -1, -1}};
  Component wide{{{Rat(-2, 5), Rat(1, 4)},
                  {Rat(2, 5), Rat(1, 4)},
                  {Rat(2, 5), Rat(3, 5)},
                  {Rat(-2, 5), Rat(3, 5)}},
                 GroupElement::identity(GroupId::klein),
                 {+1, +1, +1, +1}};
  return LinkDiagram{SurfaceKind::klein, inner, wide};
}

void BM_klein_multiply(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> d(-40, 40);
  const GroupElement g = GroupElement::klein(d(rng), d(rng));
  const GroupElement h = GroupElement::klein(d(rng), d(rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(multiply(g, h));
  }
}
BENCHMARK(BM_klein_multiply);

void BM_pair_canonical(benchmark::State& state) {
  const GroupElement alpha = GroupElement::klein(3, -7);
  const GroupElement beta = GroupElement::klein(-2, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair_canonical(alpha, beta));
  }
}
BENCHMARK(BM_pair_canonical);

void BM_crossings(benchmark::State& state) {
  const LinkDiagram d = contractible_pair();
  for (auto _ : state) {
    benchmark::DoNotOptimize(crossings(d));
  }
}
BENCHMARK(BM_crossings);

void BM_lk1(benchmark::State& state) {
  const LinkDiagram d = contractible_pair();
  for (auto _ : state) {
    benchmark::DoNotOptimize(lk1(d));
  }
}
BENCHMARK(BM_lk1);

void BM_i2_two_event_path(benchmark::State& state) {
  LinkDiagram split = contractible_pair();
  split.comp1.heights = {-1, -1, -1, -1, -1};
  const MoveScript path{split, {SetHeight{1, 1, +2}, SetHeight{1, 0, +2}}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(i2(path));
  }
}
BENCHMARK(BM_i2_two_event_path);

void BM_random_script(benchmark::State& state) {
  LinkDiagram split = contractible_pair();
  split.comp1.heights = {-1, -1, -1, -1, -1};
  std::uint64_t seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_script(split, ScriptGenOptions{10, true, 4}, seed++));
  }
}
BENCHMARK(BM_random_script);

void BM_config_distance(benchmark::State& state) {
  const Configuration a = make_configuration(
      {{SourcePoint{1, Rat(0)}, SourcePoint{2, Rat(1, 3)}},
       {SourcePoint{1, Rat(1, 2)}, SourcePoint{2, Rat(2, 3)}, SourcePoint{2, Rat(5, 6)}}});
  const Configuration b = make_configuration(
      {{SourcePoint{1, Rat(1, 7)}, SourcePoint{2, Rat(3, 7)}},
       {SourcePoint{1, Rat(4, 7)}, SourcePoint{1, Rat(5, 7)}, SourcePoint{2, Rat(6, 7)}}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(config_distance(a, b));
  }
}
BENCHMARK(BM_config_distance);

}  // namespace

BENCHMARK_MAIN();
