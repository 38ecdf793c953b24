#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgames/detgame.hpp"
#include "sgames/rng.hpp"

using namespace sgames;

namespace {

std::vector<SetSpec> coalitions_up_to(std::size_t max_prefix) {
  std::vector<SetSpec> out;
  for (std::size_t len = 0; len <= max_prefix; ++len) {
    for (const BitString& p : all_strings(len)) {
      out.emplace_back(p, 0);
      out.emplace_back(p, 1);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("three-valued connectives") {
  using V = Verdict;
  CHECK(verdict_and(V::Losing, V::Undetermined) == V::Losing);
  CHECK(verdict_and(V::Winning, V::Undetermined) == V::Undetermined);
  CHECK(verdict_and(V::Winning, V::Winning) == V::Winning);
  CHECK(verdict_or(V::Winning, V::Undetermined) == V::Winning);
  CHECK(verdict_or(V::Losing, V::Undetermined) == V::Undetermined);
  CHECK(verdict_or(V::Losing, V::Losing) == V::Losing);
}

TEST_CASE("type-1 example evaluates like the listing") {
  DeterminingSets sets = finite_example(1);
  CHECK(eval(sets, SetSpec::full_set(), 2) == Verdict::Winning);
  CHECK(eval(sets, SetSpec::empty_set(), 2) == Verdict::Losing);
  // characteristic sequence 0100...: the length-3 prefix 010 decides it
  CHECK(eval(sets, SetSpec(BitString("01"), 0), 3) == Verdict::Losing);
  CHECK(eval(sets, SetSpec(BitString("01"), 0), 2) == Verdict::Undetermined);
  CHECK(eval(sets, SetSpec::full_set(), 0) == Verdict::Undetermined);
}

TEST_CASE("the catalogue holds exactly the eleven realizable types") {
  CHECK(finite_example_ids().size() == 11);
  for (int id : finite_example_ids()) {
    DeterminingSets sets = finite_example(id);
    CHECK(!sets.t1.empty());
    CHECK(!sets.t0.empty());
  }
  CHECK(finite_example(2).t0 == std::set<BitString>{BitString("0")});
  CHECK(finite_example(9).t0 == std::set<BitString>{BitString("1")});
  CHECK(finite_example(9).t1 == std::set<BitString>{BitString("0")});
  for (int id : {6, 8, 10, 14, 16}) {
    CHECK_THROWS_WITH_AS(finite_example(id), "type provably empty", std::invalid_argument);
  }
  CHECK_THROWS_AS(finite_example(0), std::invalid_argument);
  CHECK_THROWS_AS(finite_example(17), std::invalid_argument);
}

TEST_CASE("partition checks") {
  PartitionReport r1 = partition_check(finite_example(1), 3, true);
  CHECK(r1.pass);
  CHECK(r1.conflicting.empty());
  CHECK(r1.uncovered.empty());

  DeterminingSets dict;
  dict.t0.insert(BitString("0"));
  dict.t1.insert(BitString("1"));
  CHECK(partition_check(dict, 1, true).pass);

  DeterminingSets overlap;
  overlap.t0.insert(BitString("0"));
  overlap.t1.insert(BitString("0"));
  PartitionReport bad = partition_check(overlap, 1, true);
  CHECK(!bad.pass);
  REQUIRE(bad.conflicting.size() == 1);
  CHECK(bad.conflicting[0] == BitString("0"));
}

TEST_CASE("every catalogue game splits all coalitions at its own depth") {
  for (int id : finite_example_ids()) {
    DeterminingSets sets = finite_example(id);
    PartitionReport report = partition_check(sets, sets.max_length(), true);
    CHECK(report.pass);
    for (const SetSpec& c : coalitions_up_to(6)) {
      CHECK(eval(sets, c, sets.max_length()) != Verdict::Undetermined);
    }
  }
}

TEST_CASE("catalogue strings are pairwise incompatible") {
  for (int id : finite_example_ids()) {
    DeterminingSets sets = finite_example(id);
    CHECK(compatibility_violations(sets.all_strings_sorted()).empty());
  }
}

TEST_CASE("verdicts never flip as depth grows") {
  Rng rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    int id = finite_example_ids()[rng.below(finite_example_ids().size())];
    DeterminingSets sets = finite_example(id);
    std::string bits;
    for (std::uint64_t i = rng.below(7); i > 0; --i) bits.push_back(rng.bit() ? '1' : '0');
    SetSpec c(BitString(bits), rng.bit());
    Verdict last = Verdict::Undetermined;
    for (std::size_t d = 0; d <= 8; ++d) {
      Verdict v = eval(sets, c, d);
      if (last != Verdict::Undetermined) CHECK(v == last);
      last = v;
    }
  }
}

TEST_CASE("compatibility scan flags prefix pairs only") {
  std::vector<BitString> strings = {BitString("0"), BitString("01"), BitString("10")};
  auto viol = compatibility_violations(strings);
  REQUIRE(viol.size() == 1);
  CHECK(viol[0].first == BitString("0"));
  CHECK(viol[0].second == BitString("01"));
  CHECK(compatibility_violations(strings) == compatibility_violations_serial(strings));
}

TEST_CASE("parallel and serial partition checks agree") {
  for (int id : finite_example_ids()) {
    DeterminingSets sets = finite_example(id);
    for (std::size_t len = 1; len <= 6; ++len) {
      PartitionReport a = partition_check(sets, len, false);
      PartitionReport b = partition_check_serial(sets, len, false);
      CHECK(a.pass == b.pass);
      CHECK(a.conflicting == b.conflicting);
      CHECK(a.uncovered == b.uncovered);
    }
  }
}
