// Compares the serial reference path of the sweep drivers against the
// OpenMP fan-out on the two heaviest workloads: the naturality sweep and
// the black-box functoriality sweep.

#include <chrono>
#include <cstdio>
#include <random>

#include "bondsem/eval.hpp"
#include "bondsem/laws.hpp"
#include "bondsem/sweep.hpp"

using namespace bondsem;

namespace {

double seconds(auto fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

Corelation random_corelation(int dom, int cod, std::mt19937_64& rng) {
  const int total = dom + cod;
  std::vector<std::vector<int>> buckets(total);
  for (int i = 0; i < total; ++i) buckets[rng() % total].push_back(i);
  std::vector<std::vector<int>> blocks;
  for (auto& b : buckets)
    if (!b.empty()) blocks.push_back(std::move(b));
  return Corelation::make(dom, cod, std::move(blocks));
}

int naturality_sweep(int count, int max_size, int threads) {
  auto reports = sweep_map(
      count,
      [&](int i) {
        std::mt19937_64 mix(0xb5297a4dULL + i);
        int size = 1 + static_cast<int>(mix() % static_cast<std::uint64_t>(max_size));
        return check_naturality(random_term(size, mix(), Signature::bond())).equal;
      },
      threads);
  int commuting = 0;
  for (bool ok : reports) commuting += ok ? 1 : 0;
  return commuting;
}

void blackbox_sweep(int count, int threads) {
  auto results = sweep_map(
      count,
      [&](int i) {
        std::mt19937_64 rng(0x2545f491ULL + i);
        int a = 1 + rng() % 4, b = 1 + rng() % 4, c = 1 + rng() % 4;
        Corelation f = random_corelation(a, b, rng);
        Corelation g = random_corelation(b, c, rng);
        return black_box(compose(g, f)) == rel_compose(black_box(g), black_box(f));
      },
      threads);
  for (bool ok : results)
    if (!ok) std::fprintf(stderr, "unexpected functoriality failure\n");
}

}  // namespace

int main(int argc, char** argv) {
  const int count = argc > 1 ? std::atoi(argv[1]) : 400;
  const int max_size = 12;
  const int threads = hardware_threads();

  std::printf("%-28s %10s %10s %8s\n", "workload", "serial(s)", "omp(s)", "speedup");
  {
    int commuting_serial = 0, commuting_parallel = 0;
    double serial = seconds([&] { commuting_serial = naturality_sweep(count, max_size, 1); });
    double parallel =
        seconds([&] { commuting_parallel = naturality_sweep(count, max_size, threads); });
    if (commuting_serial != commuting_parallel)
      std::fprintf(stderr, "serial and parallel sweeps disagree\n");
    std::printf("%-28s %10.3f %10.3f %7.2fx\n", "naturality sweep", serial, parallel,
                serial / parallel);
  }
  {
    double serial = seconds([&] { blackbox_sweep(4 * count, 1); });
    double parallel = seconds([&] { blackbox_sweep(4 * count, threads); });
    std::printf("%-28s %10.3f %10.3f %7.2fx\n", "black-box functoriality", serial, parallel,
                serial / parallel);
  }
  std::printf("threads: %d\n", threads);
  return 0;
}
