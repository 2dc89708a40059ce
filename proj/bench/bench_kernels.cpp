// SPDX-License-Identifier: Apache-2.0
//
// Compares the OpenMP kernels against their serial reference twins:
// transitive closure, the all-pairs join/meet verification, and the
// edge-deletion classification scan.
//
//   bench_kernels [a b] [reps]     (defaults: 12 12 3)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "crystal/build.hpp"
#include "crystal/lattice.hpp"
#include "crystal/reach.hpp"
#include "crystal/verify.hpp"

using namespace crystal;

namespace {

template <typename Fn>
double best_of(int reps, Fn&& fn) {
  double best = 1e100;
  for (int r = 0; r < reps; ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const double ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - start)
            .count();
    if (ms < best) best = ms;
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms,
            bool equal) {
  std::printf("%-28s %10.2f ms %10.2f ms %8.2fx   %s\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms, equal ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int a = 12, b = 12, reps = 3;
  if (argc >= 3) {
    a = std::atoi(argv[1]);
    b = std::atoi(argv[2]);
  }
  if (argc >= 4) reps = std::atoi(argv[3]);

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  const ColoredDigraph g = build_rc(a, b);
  std::printf("closure graph: K(%d,%d), %zu vertices, %zu edges\n", a, b,
              g.vertex_count(), g.edge_count());
  ReachMatrix serial_m, parallel_m;
  const double closure_serial =
      best_of(reps, [&] { serial_m = transitive_closure_serial(g); });
  const double closure_parallel =
      best_of(reps, [&] { parallel_m = transitive_closure_parallel(g); });

  const int la = std::min(a, 6), lb = std::min(b, 6);
  const ColoredDigraph lg = build_rc(la, lb);
  std::printf("lattice graph: K(%d,%d), %zu vertices\n", la, lb,
              lg.vertex_count());
  const PosetView view(lg);
  bool lattice_equal = true;
  const double pairs_serial = best_of(reps, [&] {
    lattice_equal = lattice_equal && !verify_lattice_pairs_serial(view);
  });
  const double pairs_parallel = best_of(reps, [&] {
    lattice_equal = lattice_equal && !verify_lattice_pairs_parallel(view);
  });

  const int ma = std::min(a, 3), mb = std::min(b, 3);
  const ColoredDigraph mg = build_rc(ma, mb);
  std::printf("mutation graph: K(%d,%d), %zu edges\n", ma, mb, mg.edge_count());
  bool mutation_equal = true;
  const double del_serial = best_of(reps, [&] {
    mutation_equal =
        mutation_equal && !verify::edge_deletion_sensitivity(mg, false);
  });
  const double del_parallel = best_of(reps, [&] {
    mutation_equal =
        mutation_equal && !verify::edge_deletion_sensitivity(mg, true);
  });

  std::printf("\n%-28s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");
  report("transitive_closure", closure_serial, closure_parallel,
         serial_m == parallel_m);
  report("lattice_pair_verification", pairs_serial, pairs_parallel,
         lattice_equal);
  report("edge_deletion_scan", del_serial, del_parallel, mutation_equal);
  return (serial_m == parallel_m && lattice_equal && mutation_equal) ? 0 : 1;
}
