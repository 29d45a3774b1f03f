#include <benchmark/benchmark.h>

#include <random>

#include "conjforge/cli/audit.hpp"
#include "conjforge/lamplighter/metric.hpp"
#include "conjforge/polycyclic/conjugacy.hpp"

using namespace conjforge;
using exactnum::IntMat;
using exactnum::IntVec;

namespace {

Exec exec_of(benchmark::State const &state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void label(benchmark::State &state) { state.SetLabel(state.range(0) ? "openmp" : "serial"); }

void BM_LLWordLengths(benchmark::State &state)
{
  std::mt19937_64 rng(1);
  std::vector<lamplighter::LLElement> gs;
  for (int i = 0; i < 20000; ++i)
    gs.push_back(cli::sample_ll(rng, 2 + i % 3, 40));
  for (auto _ : state)
    benchmark::DoNotOptimize(lamplighter::ll_word_lengths(gs, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * int64_t(gs.size()));
  label(state);
}
BENCHMARK(BM_LLWordLengths)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// A, A^2 share eigenvectors; shifts on the relation line give wide stabiliser boxes.
void BM_PCBoxSearch(benchmark::State &state)
{
  IntMat a{{2, 1}, {1, 1}};
  auto spec = polycyclic::pc_validate_spec({a, a * a});
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<long> da(-40, 40);
  std::vector<std::pair<polycyclic::PCElement, polycyclic::PCElement>> pairs;
  for (int i = 0; i < 40; ++i) {
    IntVec b{mpz_class(3), mpz_class(2)};
    polycyclic::PCElement u(IntVec{mpz_class(da(rng)), mpz_class(da(rng))}, b);
    polycyclic::PCElement w(IntVec{mpz_class(da(rng)), mpz_class(da(rng))}, b);
    pairs.emplace_back(u, w);
  }
  for (auto _ : state)
    for (auto const &[u, w] : pairs)
      benchmark::DoNotOptimize(polycyclic::pc_conj_nonzero(u, w, spec, exec_of(state)));
  state.SetItemsProcessed(state.iterations() * int64_t(pairs.size()));
  label(state);
}
BENCHMARK(BM_PCBoxSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_AuditLamplighter(benchmark::State &state)
{
  cli::AuditConfig cfg{cli::GroupContext{cli::Family::Lamplighter, 2, nullptr}, 2000, 42, 24,
                       exec_of(state)};
  for (auto _ : state)
    benchmark::DoNotOptimize(cli::run_audit(cfg));
  state.SetItemsProcessed(state.iterations() * int64_t(cfg.samples));
  label(state);
}
BENCHMARK(BM_AuditLamplighter)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
