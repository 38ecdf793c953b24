#include "sgames/axioms.hpp"

#include <stdexcept>

namespace sgames {

int type_id_from_flags(bool monotonic, bool proper, bool strong, bool weak) {
  int id = 1;
  if (!monotonic) id += 8;
  if (!proper) id += 4;
  if (!strong) id += 2;
  if (weak) id += 1;  // the fourth sign is nonweakness
  return id;
}

TypeVerdict analyze(const FiniteGame& g) {
  if (g.carrier < 0 || g.carrier > FiniteGame::kMaxCarrier) {
    throw std::invalid_argument("carrier size out of range");
  }
  const std::uint32_t count = g.mask_count();
  const std::uint32_t full = count - 1;

  TypeVerdict v;
  v.monotonic = true;
  for (std::uint32_t m = 0; m < count && v.monotonic; ++m) {
    if (!g.wins(m)) continue;
    for (int i = 0; i < g.carrier; ++i) {
      if (!(m & (1u << i)) && !g.wins(m | (1u << i))) {
        v.monotonic = false;
        break;
      }
    }
  }
  v.proper = true;
  v.strong = true;
  for (std::uint32_t m = 0; m < count; ++m) {
    const std::uint32_t c = full & ~m;
    if (g.wins(m) && g.wins(c)) v.proper = false;
    if (!g.wins(m) && !g.wins(c)) v.strong = false;
  }
  v.weak = g.winning == 0 || veto_players(g) != 0;
  v.type_id = type_id_from_flags(v.monotonic, v.proper, v.strong, v.weak);
  return v;
}

std::uint32_t veto_players(const FiniteGame& g) {
  const std::uint32_t full = g.mask_count() - 1;
  std::uint32_t veto = full;
  for (std::uint32_t m = 0; m < g.mask_count(); ++m) {
    if (g.wins(m)) veto &= m;
  }
  return veto;
}

bool is_dictatorial(const FiniteGame& g) {
  for (int i = 0; i < g.carrier; ++i) {
    std::uint32_t dict = 0;
    for (std::uint32_t m = 0; m < g.mask_count(); ++m) {
      if (m & (1u << i)) dict |= 1u << m;
    }
    if (g.winning == dict) return true;
  }
  return false;
}

FiniteGame game_from_sets(const DeterminingSets& sets, int carrier) {
  if (carrier < 0 || carrier > FiniteGame::kMaxCarrier) {
    throw std::invalid_argument("carrier size out of range");
  }
  if (sets.max_length() > static_cast<std::size_t>(carrier)) {
    throw std::invalid_argument("determining strings longer than the carrier");
  }
  PartitionReport report = partition_check_serial(sets, carrier, true);
  if (!report.pass) {
    throw std::invalid_argument("determining sets do not partition the carrier's coalitions");
  }
  FiniteGame g;
  g.carrier = carrier;
  for (std::uint32_t m = 0; m < g.mask_count(); ++m) {
    BitString s = BitString::from_mask(m, carrier);
    for (std::size_t len = 1; len <= s.size(); ++len) {
      BitString p = s.prefix(len);
      if (sets.t1.count(p)) {
        g.winning |= 1u << m;
        break;
      }
      if (sets.t0.count(p)) break;
    }
  }
  return g;
}

std::set<int> exhaustive_search_serial(int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("exhaustive search supports carriers up to 4");
  std::set<int> found;
  const std::uint64_t games = std::uint64_t{1} << (1u << k);
  for (std::uint64_t w = 0; w < games; ++w) {
    FiniteGame g{k, static_cast<std::uint32_t>(w)};
    found.insert(analyze(g).type_id);
  }
  return found;
}

std::set<int> exhaustive_search(int k) {
  if (k < 0 || k > 4) throw std::invalid_argument("exhaustive search supports carriers up to 4");
  const std::int64_t games = std::int64_t{1} << (1u << k);
  bool seen[17] = {};
#pragma omp parallel
  {
    bool local[17] = {};
#pragma omp for nowait schedule(static)
    for (std::int64_t w = 0; w < games; ++w) {
      FiniteGame g{k, static_cast<std::uint32_t>(w)};
      local[analyze(g).type_id] = true;
    }
#pragma omp critical
    for (int t = 1; t <= 16; ++t) {
      if (local[t]) seen[t] = true;
    }
  }
  std::set<int> found;
  for (int t = 1; t <= 16; ++t) {
    if (seen[t]) found.insert(t);
  }
  return found;
}

}  // namespace sgames
