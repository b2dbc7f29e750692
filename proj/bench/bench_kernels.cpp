// Serial reference kernels against their OpenMP versions.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "klab/dihedral.hpp"
#include "klab/families.hpp"
#include "klab/homsolver.hpp"

using namespace klab;

namespace {

double seconds(const std::function<void()>& f, int reps) {
  auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() / reps;
}

void row(const std::string& name, double serial, double parallel) {
  std::printf("%-40s serial %9.4fs  openmp %9.4fs  speedup %5.2fx\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  std::printf("threads: %d\n", omp_get_max_threads());
  for (auto [n, k, s] : {std::tuple{24, 4, 5}, std::tuple{28, 5, 5}, std::tuple{30, 3, 8}}) {
    Graph g = stable_kneser(n, k, s);
    bool same = enumerate_shifts(g).same_members(enumerate_shifts_serial(g));
    row("shifts KG(" + std::to_string(n) + "," + std::to_string(k) + ")_" + std::to_string(s) + (same ? "" : " MISMATCH"),
        seconds([&] { enumerate_shifts_serial(g); }, 5), seconds([&] { enumerate_shifts(g); }, 5));
  }
  for (auto [n, k, s] : {std::tuple{9, 3, 2}, std::tuple{10, 2, 4}, std::tuple{10, 3, 2}}) {
    Graph g = stable_kneser(n, k, s);
    bool same = is_chi_critical(g).critical == is_chi_critical_serial(g).critical;
    row("criticality KG(" + std::to_string(n) + "," + std::to_string(k) + ")_" + std::to_string(s) +
            (same ? "" : " MISMATCH"),
        seconds([&] { is_chi_critical_serial(g); }, 1), seconds([&] { is_chi_critical(g); }, 1));
  }
  return 0;
}
