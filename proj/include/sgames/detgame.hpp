#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sgames/bitstr.hpp"
#include "sgames/setspec.hpp"

namespace sgames {

// Three-valued answer of a budgeted evaluation. Undetermined means the
// depth or stage budget ran out before a determining prefix was found,
// never that the game itself has no answer.
enum class Verdict { Losing, Winning, Undetermined };

std::string to_string(Verdict v);

// Three-valued connectives: a decided side that forces the result wins,
// otherwise Undetermined is absorbing.
Verdict verdict_and(Verdict a, Verdict b);
Verdict verdict_or(Verdict a, Verdict b);

// A game given by its losing-determining strings T0 and winning-determining
// strings T1. For the finite catalogue games the sets are complete; for the
// staged constructions they are snapshots that only ever grow.
struct DeterminingSets {
  std::set<BitString> t0;
  std::set<BitString> t1;

  bool operator==(const DeterminingSets&) const = default;

  std::size_t max_length() const;
  std::vector<BitString> all_strings_sorted() const;  // t0 then t1, each sorted
};

// Scans the coalition's characteristic prefixes of length 1..depth against
// the snapshot. A verdict, once reached at some depth, never changes at a
// larger one.
Verdict eval(const DeterminingSets& sets, const SetSpec& coalition, std::size_t depth);

struct PartitionReport {
  bool pass = false;
  // Strings of length max_len with two or more prefixes in T0 u T1.
  std::vector<BitString> conflicting;
  // Strings with none (only a failure when totality is required).
  std::vector<BitString> uncovered;
};

// Checks that every string of length max_len has at most one prefix in
// T0 u T1, and exactly one if require_total is set.
PartitionReport partition_check(const DeterminingSets& sets, std::size_t max_len,
                                bool require_total = true);
PartitionReport partition_check_serial(const DeterminingSets& sets, std::size_t max_len,
                                       bool require_total = true);

// All pairs of distinct compatible strings in the list (sorted, deduplicated
// output). Empty result means pairwise incompatibility holds.
std::vector<std::pair<BitString, BitString>> compatibility_violations(
    const std::vector<BitString>& strings);
std::vector<std::pair<BitString, BitString>> compatibility_violations_serial(
    const std::vector<BitString>& strings);

// The catalogue of finite games, one per nonempty type realizable with a
// finite carrier. Types 6, 8, 10, 14 and 16 are provably empty and rejected.
DeterminingSets finite_example(int type_id);
const std::vector<int>& finite_example_ids();  // {1,2,3,4,5,7,9,11,12,13,15}

}  // namespace sgames
