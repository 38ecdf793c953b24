// Serial references and parallel kernels must agree bit for bit on shared
// inputs; this is the contract the benchmark relies on.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgames/axioms.hpp"
#include "sgames/omega.hpp"
#include "sgames/rng.hpp"

using namespace sgames;

TEST_CASE("exhaustive search kernels agree on every carrier") {
  for (int k = 0; k <= 4; ++k) {
    CHECK(exhaustive_search(k) == exhaustive_search_serial(k));
  }
}

TEST_CASE("partition kernels agree on dense synthetic sets") {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    DeterminingSets sets;
    for (int i = 0; i < 12; ++i) {
      std::string bits;
      for (std::uint64_t j = 1 + rng.below(5); j > 0; --j) {
        bits.push_back(rng.bit() ? '1' : '0');
      }
      (rng.bit() ? sets.t1 : sets.t0).insert(BitString(bits));
    }
    for (std::size_t len = 1; len <= 8; ++len) {
      PartitionReport a = partition_check(sets, len, true);
      PartitionReport b = partition_check_serial(sets, len, true);
      CHECK(a.pass == b.pass);
      CHECK(a.conflicting == b.conflicting);
      CHECK(a.uncovered == b.uncovered);
    }
  }
}

TEST_CASE("compatibility kernels agree on random pools") {
  Rng rng(6);
  std::vector<BitString> pool;
  for (int i = 0; i < 400; ++i) {
    std::string bits;
    for (std::uint64_t j = 1 + rng.below(10); j > 0; --j) {
      bits.push_back(rng.bit() ? '1' : '0');
    }
    pool.push_back(BitString(bits));
  }
  CHECK(compatibility_violations(pool) == compatibility_violations_serial(pool));
}

TEST_CASE("extension sweep kernels agree") {
  StagesPtr st = compute_stages_shared(Numbering::Test, 8, 100000);
  OmegaGame g = make_omega(st, SetSpec::full_set());
  for (std::size_t stage = 0; stage < st->stages.size(); ++stage) {
    SweepStats par = extension_agreement(g, stage, 2048, 1500, 21);
    SweepStats ser = extension_agreement_serial(g, stage, 2048, 1500, 21);
    CHECK(par.checked == ser.checked);
    CHECK(par.violations == ser.violations);
  }
}
