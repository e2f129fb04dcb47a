#include <benchmark/benchmark.h>

#include "weave/cohomology.hpp"
#include "weave/ideal.hpp"
#include "weave/poly_parse.hpp"
#include "weave/web.hpp"

using namespace weave;

namespace {

MultiPoly H(int n, const char* text) { return parse_poly(text, VarTable::bihomogeneous(n)); }

void BM_BuchbergerCyclic3(benchmark::State& state) {
  const VarTablePtr vars = VarTable::generic({"a", "b", "c"});
  const std::vector<MultiPoly> gens{parse_poly("a + b + c", vars), parse_poly("a*b + b*c + c*a", vars),
                                    parse_poly("a*b*c - 1", vars)};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
}
BENCHMARK(BM_BuchbergerCyclic3);

void BM_BuchbergerKatsura3(benchmark::State& state) {
  const VarTablePtr vars = VarTable::generic({"a", "b", "c"});
  const std::vector<MultiPoly> gens{parse_poly("a + 2*b + 2*c - 1", vars),
                                    parse_poly("a^2 + 2*b^2 + 2*c^2 - a", vars),
                                    parse_poly("2*a*b + 2*b*c - b", vars)};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens));
}
BENCHMARK(BM_BuchbergerKatsura3);

void BM_ClairautCertify(benchmark::State& state) {
  const CiWeb w(2, {BiHomogPde(H(2, "u1^2 + u2^2 - u0^2"))});
  for (auto _ : state) benchmark::DoNotOptimize(certify(w));
}
BENCHMARK(BM_ClairautCertify);

void BM_ThreefoldDicritical(benchmark::State& state) {
  const CiWeb w(3, {BiHomogPde(H(3, "X1*u2^2 - X2*u1^2")), BiHomogPde(H(3, "u1^2 - u3^2"))});
  for (auto _ : state) benchmark::DoNotOptimize(is_dicritical(w));
}
BENCHMARK(BM_ThreefoldDicritical);

void BM_ClairautCaustic(benchmark::State& state) {
  const CiWeb w(2, {BiHomogPde(H(2, "u1^2 + u2^2 - u0^2"))});
  for (auto _ : state) benchmark::DoNotOptimize(caustic_generators(w, {0, 2}));
}
BENCHMARK(BM_ClairautCaustic);

void BM_BottNumber(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<Bidegree> pairs;
  for (int a = 0; a < n - 1; ++a) pairs.push_back({a % 3, 2 + a % 2});
  const MultiDegreeData m(n, pairs);
  for (auto _ : state) benchmark::DoNotOptimize(bott_number(m));
}
BENCHMARK(BM_BottNumber)->DenseRange(2, 6);

}  // namespace

BENCHMARK_MAIN();
