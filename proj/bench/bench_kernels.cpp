/* Wall-clock comparison of the parallel enumeration kernels against their
   serial reference paths.  Both paths must produce identical tables; a
   mismatch makes the run exit nonzero. */

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "strata/weyl.hpp"

using namespace strata;

namespace {

double best_of(int reps, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    double s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (s < best) best = s;
  }
  return best;
}

bool same_table(const WeylGroupTable& a, const WeylGroupTable& b) {
  return a.elems == b.elems && a.words == b.words &&
         a.gen_roots == b.gen_roots;
}

int mismatches = 0;

void row(const std::string& name, std::size_t n, double serial,
         double parallel, bool match) {
  if (!match) ++mismatches;
  std::printf("%-34s %9zu %10.4fs %10.4fs %7.2fx  %s\n", name.c_str(), n,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              match ? "yes" : "NO");
}

void bench_full_group(const std::string& type, int reps) {
  auto rs = build_root_system(parse_type(type));
  WeylGroupTable ts, tp;
  double s = best_of(reps, [&] { ts = full_weyl_group(rs, kDefaultGroupCap,
                                                      /*parallel=*/false); });
  double p = best_of(reps, [&] { tp = full_weyl_group(rs, kDefaultGroupCap,
                                                      /*parallel=*/true); });
  row("full_weyl_group " + type, ts.elems.size(), s, p, same_table(ts, tp));
}

void bench_orbit_scan(const std::string& type, const std::string& label,
                      const RootSet& seed, int reps) {
  auto rs = build_root_system(parse_type(type));
  RootSet start = positive_key(rs, seed);
  OrbitScan os, op;
  double s = best_of(reps, [&] {
    os = subsystem_orbit_scan(rs, start, {}, kDefaultOrbitCap,
                              /*parallel=*/false);
  });
  double p = best_of(reps, [&] {
    op = subsystem_orbit_scan(rs, start, {}, kDefaultOrbitCap,
                              /*parallel=*/true);
  });
  row("subsystem_orbit_scan " + type + " " + label, os.orbit_size, s, p,
      os.orbit_size == op.orbit_size && os.hit == op.hit);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP: disabled at build time\n");
#endif
  std::printf("%-34s %9s %11s %11s %8s  %s\n", "kernel", "n", "serial",
              "parallel", "speedup", "match");

  bench_full_group("D4", 3);
  bench_full_group("F4", 3);
  bench_full_group("D5", 3);
  bench_full_group("E6", 1);

  {
    auto rs = build_root_system(parse_type("E7"));
    bench_orbit_scan("E7", "A2",
                     {rs.simple_idx[0], rs.simple_idx[2]}, 3);
  }
  {
    auto rs = build_root_system(parse_type("E8"));
    bench_orbit_scan("E8", "2A1",
                     {rs.simple_idx[0], rs.simple_idx[3]}, 3);
    bench_orbit_scan("E8", "A2",
                     {rs.simple_idx[0], rs.simple_idx[2]}, 3);
  }

  if (mismatches) {
    std::printf("%d kernel(s) disagree between modes\n", mismatches);
    return 1;
  }
  std::printf("serial and parallel agree on every kernel\n");
  return 0;
}
