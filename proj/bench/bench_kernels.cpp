// Wall-clock comparison of the serial reference kernels against the
// OpenMP ones. Outputs one line per kernel and checks the results agree.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgames/axioms.hpp"
#include "sgames/omega.hpp"
#include "sgames/rng.hpp"

using namespace sgames;
namespace chrono = std::chrono;

namespace {

template <typename Fn>
double time_ms(Fn fn, int reps = 3) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    auto t0 = chrono::steady_clock::now();
    fn();
    double ms = chrono::duration<double, std::milli>(chrono::steady_clock::now() - t0).count();
    best = std::min(best, ms);
  }
  return best;
}

void report(const char* name, double serial_ms, double parallel_ms, bool agree) {
  std::cout << name << ": serial " << serial_ms << " ms, parallel " << parallel_ms
            << " ms, speedup x" << (parallel_ms > 0 ? serial_ms / parallel_ms : 0)
            << (agree ? "" : "  [MISMATCH]") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without openmp; both columns run serially\n";
#endif

  {
    std::set<int> a, b;
    double s = time_ms([&] { a = exhaustive_search_serial(4); });
    double p = time_ms([&] { b = exhaustive_search(4); });
    report("carrier-4 sweep (65536 games)", s, p, a == b);
  }

  {
    DeterminingSets sets = finite_example(3);
    PartitionReport a, b;
    double s = time_ms([&] { a = partition_check_serial(sets, 18, true); });
    double p = time_ms([&] { b = partition_check(sets, 18, true); });
    report("partition scan (2^18 strings)", s, p,
           a.pass == b.pass && a.conflicting == b.conflicting && a.uncovered == b.uncovered);
  }

  {
    Rng rng(1);
    std::vector<BitString> pool;
    for (int i = 0; i < 3000; ++i) {
      std::string bits;
      for (std::uint64_t j = 1 + rng.below(14); j > 0; --j) {
        bits.push_back(rng.bit() ? '1' : '0');
      }
      pool.push_back(BitString(bits));
    }
    std::vector<std::pair<BitString, BitString>> a, b;
    double s = time_ms([&] { a = compatibility_violations_serial(pool); });
    double p = time_ms([&] { b = compatibility_violations(pool); });
    report("pairwise compatibility (3000 strings)", s, p, a == b);
  }

  {
    StagesPtr st = compute_stages_shared(Numbering::Test, 10, 100000);
    OmegaGame g = make_omega(st, SetSpec::full_set());
    SweepStats a, b;
    double s = time_ms([&] { a = extension_agreement_serial(g, 9, 4096, 50000, 9); });
    double p = time_ms([&] { b = extension_agreement(g, 9, 4096, 50000, 9); });
    report("extension sweep (50k samples, stage 9)", s, p,
           a.checked == b.checked && a.violations == b.violations);
  }
  return 0;
}
