#include "sgames/detgame.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace sgames {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Losing: return "losing";
    case Verdict::Winning: return "winning";
    case Verdict::Undetermined: return "undetermined";
  }
  return "?";
}

Verdict verdict_and(Verdict a, Verdict b) {
  if (a == Verdict::Losing || b == Verdict::Losing) return Verdict::Losing;
  if (a == Verdict::Winning && b == Verdict::Winning) return Verdict::Winning;
  return Verdict::Undetermined;
}

Verdict verdict_or(Verdict a, Verdict b) {
  if (a == Verdict::Winning || b == Verdict::Winning) return Verdict::Winning;
  if (a == Verdict::Losing && b == Verdict::Losing) return Verdict::Losing;
  return Verdict::Undetermined;
}

std::size_t DeterminingSets::max_length() const {
  std::size_t n = 0;
  for (const auto& s : t0) n = std::max(n, s.size());
  for (const auto& s : t1) n = std::max(n, s.size());
  return n;
}

std::vector<BitString> DeterminingSets::all_strings_sorted() const {
  std::vector<BitString> out(t0.begin(), t0.end());
  out.insert(out.end(), t1.begin(), t1.end());
  return out;
}

Verdict eval(const DeterminingSets& sets, const SetSpec& coalition, std::size_t depth) {
  const std::size_t limit = std::min(depth, sets.max_length());
  for (std::size_t len = 1; len <= limit; ++len) {
    BitString p = coalition.characteristic_prefix(len);
    if (sets.t1.count(p)) return Verdict::Winning;
    if (sets.t0.count(p)) return Verdict::Losing;
  }
  return Verdict::Undetermined;
}

namespace {

int prefix_hits(const DeterminingSets& sets, const BitString& s) {
  int hits = 0;
  for (std::size_t len = 1; len <= s.size(); ++len) {
    BitString p = s.prefix(len);
    hits += static_cast<int>(sets.t0.count(p));
    hits += static_cast<int>(sets.t1.count(p));
  }
  return hits;
}

}  // namespace

PartitionReport partition_check_serial(const DeterminingSets& sets, std::size_t max_len,
                                       bool require_total) {
  PartitionReport report;
  for (const BitString& s : all_strings(max_len)) {
    int hits = prefix_hits(sets, s);
    if (hits > 1) report.conflicting.push_back(s);
    if (hits == 0) report.uncovered.push_back(s);
  }
  report.pass = report.conflicting.empty() && (!require_total || report.uncovered.empty());
  return report;
}

PartitionReport partition_check(const DeterminingSets& sets, std::size_t max_len,
                                bool require_total) {
  PartitionReport report;
  const std::int64_t total = std::int64_t{1} << max_len;
  std::vector<BitString> conflicting, uncovered;
#pragma omp parallel
  {
    std::vector<BitString> local_conf, local_unc;
#pragma omp for nowait
    for (std::int64_t v = 0; v < total; ++v) {
      std::string raw(max_len, '0');
      for (std::size_t i = 0; i < max_len; ++i) {
        raw[i] = (v >> (max_len - 1 - i)) & 1 ? '1' : '0';
      }
      BitString s(raw);
      int hits = prefix_hits(sets, s);
      if (hits > 1) local_conf.push_back(s);
      if (hits == 0) local_unc.push_back(s);
    }
#pragma omp critical
    {
      conflicting.insert(conflicting.end(), local_conf.begin(), local_conf.end());
      uncovered.insert(uncovered.end(), local_unc.begin(), local_unc.end());
    }
  }
  std::sort(conflicting.begin(), conflicting.end());
  std::sort(uncovered.begin(), uncovered.end());
  report.conflicting = std::move(conflicting);
  report.uncovered = std::move(uncovered);
  report.pass = report.conflicting.empty() && (!require_total || report.uncovered.empty());
  return report;
}

std::vector<std::pair<BitString, BitString>> compatibility_violations_serial(
    const std::vector<BitString>& strings) {
  std::vector<std::pair<BitString, BitString>> out;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      if (strings[i] == strings[j]) continue;
      if (!incompatible(strings[i], strings[j])) {
        out.emplace_back(strings[i], strings[j]);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<BitString, BitString>> compatibility_violations(
    const std::vector<BitString>& strings) {
  std::vector<std::pair<BitString, BitString>> out;
  const std::int64_t n = static_cast<std::int64_t>(strings.size());
#pragma omp parallel
  {
    std::vector<std::pair<BitString, BitString>> local;
#pragma omp for nowait schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = i + 1; j < n; ++j) {
        if (strings[i] == strings[j]) continue;
        if (!incompatible(strings[i], strings[j])) {
          local.emplace_back(strings[i], strings[j]);
        }
      }
    }
#pragma omp critical
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

DeterminingSets finite_example(int type_id) {
  auto sets = [](std::initializer_list<const char*> t0,
                 std::initializer_list<const char*> t1) {
    DeterminingSets out;
    for (const char* s : t0) out.t0.insert(BitString(s));
    for (const char* s : t1) out.t1.insert(BitString(s));
    return out;
  };
  switch (type_id) {
    case 1: return sets({"00", "010", "100"}, {"11", "011", "101"});
    case 2: return sets({"0"}, {"1"});
    case 3: return sets({"00", "010", "0110", "100", "1010"}, {"11", "1011", "0111"});
    case 4: return sets({"0", "10"}, {"11"});
    case 5: return sets({"00"}, {"1", "01"});
    case 7: return sets({"00", "100", "0110", "0100"}, {"11", "101", "0101", "0111"});
    case 9: return sets({"1"}, {"0"});
    case 11: return sets({"1", "01"}, {"00"});
    case 12: return sets({"1", "00"}, {"01"});
    case 13: return sets({"10"}, {"0", "11"});
    case 15: return sets({"01", "10"}, {"00", "11"});
    case 6:
    case 8:
    case 10:
    case 14:
    case 16:
      throw std::invalid_argument("type provably empty");
    default:
      throw std::invalid_argument("type id must be in 1..16");
  }
}

const std::vector<int>& finite_example_ids() {
  static const std::vector<int> ids = {1, 2, 3, 4, 5, 7, 9, 11, 12, 13, 15};
  return ids;
}

}  // namespace sgames
