#include "eafc/artin_system.hpp"
#include "eafc/dihedral.hpp"
#include "eafc/kernel_omega.hpp"
#include "eafc/snf.hpp"
#include "eafc/subgroups.hpp"
#include "eafc/word_problem.hpp"
#include "eafc/words.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

using namespace eafc;

namespace {

Word random_word(const ArtinSystem& sys, int len, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<Syllable> syl;
  for (int i = 0; i < len; ++i)
    syl.push_back({static_cast<int>(rng() % sys.vertex_count()), (rng() & 1u) ? Int(1) : Int(-1)});
  return Word::from_syllables(sys, std::move(syl));
}

ArtinSystem square_chord() {
  return ArtinSystem({"a", "b", "c", "d"},
                     {{"a", "b", 2}, {"b", "c", 2}, {"c", "d", 2}, {"d", "a", 2}, {"a", "c", 4}});
}

ArtinSystem square_all4() {
  return ArtinSystem({"a", "b", "c", "d"},
                     {{"a", "b", 4}, {"b", "c", 4}, {"c", "d", 4}, {"d", "a", 4}});
}

ArtinSystem path3_46() { return ArtinSystem({"a", "b", "c"}, {{"a", "b", 4}, {"b", "c", 6}}); }

ArtinSystem star424() {
  return ArtinSystem({"x", "u", "v", "w"}, {{"x", "u", 4}, {"x", "v", 2}, {"x", "w", 4}});
}

void BM_dihedral_central(benchmark::State& state) {
  DihedralContext ctx = DihedralContext::make(3);
  Word w = random_word(ctx.sys(), static_cast<int>(state.range(0)), 12345);
  for (auto _ : state) benchmark::DoNotOptimize(central_coords(ctx, w).trivial());
}
BENCHMARK(BM_dihedral_central)->Arg(64)->Arg(256)->Arg(1024);

void BM_dihedral_semidirect(benchmark::State& state) {
  DihedralContext ctx = DihedralContext::make(3);
  Word w = random_word(ctx.sys(), static_cast<int>(state.range(0)), 12345);
  for (auto _ : state) benchmark::DoNotOptimize(semidirect_coords(ctx, w).trivial());
}
BENCHMARK(BM_dihedral_semidirect)->Arg(64)->Arg(256)->Arg(1024);

void BM_word_problem_random(benchmark::State& state) {
  ArtinSystem sys = square_chord();
  WordProblemSolver solver(sys);
  Word w = random_word(sys, static_cast<int>(state.range(0)), 777);
  for (auto _ : state) benchmark::DoNotOptimize(solver.is_trivial(w));
}
BENCHMARK(BM_word_problem_random)->Arg(8)->Arg(16)->Arg(32);

void BM_word_problem_trivial(benchmark::State& state) {
  ArtinSystem sys = square_all4();
  WordProblemSolver solver(sys);
  // A conjugated defining relator: trivial, so the solver does full work.
  Word w = conjugate(artin_relator(sys, 0, 1), random_word(sys, 8, 99));
  for (auto _ : state) benchmark::DoNotOptimize(solver.is_trivial(w));
}
BENCHMARK(BM_word_problem_trivial);

void BM_parabolic_membership(benchmark::State& state) {
  ArtinSystem sys = path3_46();
  WordProblemSolver solver(sys);
  VertexSubset S = VertexSubset::of(sys, {"a", "b"});
  Word w = conjugate(random_word(sys, 12, 5), random_word(sys, 4, 6));
  for (auto _ : state) benchmark::DoNotOptimize(solver.in_standard_parabolic(S, w));
}
BENCHMARK(BM_parabolic_membership);

void BM_coset_enumeration(benchmark::State& state) {
  ArtinSystem sys = square_all4();
  G0Map map = G0Map::defaults(sys);
  for (auto _ : state) benchmark::DoNotOptimize(reidemeister_schreier_g0(sys, map).index);
}
BENCHMARK(BM_coset_enumeration);

void BM_omega_embed(benchmark::State& state) {
  ArtinSystem sys = star424();
  OmegaSystem os = build_omega(sys, 0);
  Word w = random_word(os.omega, 64, 4242);
  for (auto _ : state) benchmark::DoNotOptimize(embed(os, w).length());
}
BENCHMARK(BM_omega_embed);

void BM_smith_normal_form(benchmark::State& state) {
  std::mt19937 rng(31337);
  int n = static_cast<int>(state.range(0));
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a.at(i, j) = static_cast<int>(rng() % 19) - 9;
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(a).D.rows);
}
BENCHMARK(BM_smith_normal_form)->Arg(4)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
