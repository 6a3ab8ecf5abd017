// Times parallel against serial elimination on biderivation systems and
// checks the two reduced forms agree.

#include "maxclass/biderivations.hpp"
#include "maxclass/threads.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace maxclass;

namespace {

template <class Fn>
double seconds(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  const int horizon = argc > 1 ? std::atoi(argv[1]) : 40;
  const int threads = configure_threads();
  std::printf("threads=%d horizon=%d\n", threads, horizon);
  std::printf("%-4s %4s %8s %6s %10s %10s %s\n", "alg", "k", "rows", "cols", "serial_s", "omp_s",
              "same");
  int status = 0;
  for (const char* name : {"m0", "l1", "m2"}) {
    const AlgebraSpec spec = builtin_algebra(name, horizon);
    for (int k : {-1, 0, 3}) {
      PairCoordinates coords(spec, k, horizon, horizon);
      RatMatrix m = biderivation_system(spec, k, horizon, coords);
      RrefResult serial, parallel;
      const double ts = seconds([&] { serial = rref_serial(m); });
      const double tp = seconds([&] { parallel = rref(m); });
      const bool same = serial.reduced == parallel.reduced && serial.pivots == parallel.pivots;
      if (!same) status = 1;
      std::printf("%-4s %4d %8d %6d %10.3f %10.3f %s\n", name, k, m.rows(), m.cols(), ts, tp,
                  same ? "yes" : "NO");
    }
  }
  return status;
}
