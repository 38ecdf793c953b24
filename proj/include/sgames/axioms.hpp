#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "sgames/detgame.hpp"

namespace sgames {

// A game over the explicit carrier {0,...,carrier-1}. Coalitions are masks
// with bit i for player i; bit m of `winning` says whether mask m wins.
// Carriers are capped at 5 players so the winning family fits in 32 bits.
struct FiniteGame {
  int carrier = 0;
  std::uint32_t winning = 0;

  static constexpr int kMaxCarrier = 5;

  std::uint32_t mask_count() const { return 1u << carrier; }
  bool wins(std::uint32_t mask) const { return (winning >> mask) & 1u; }
};

struct TypeVerdict {
  bool monotonic = false;
  bool proper = false;
  bool strong = false;
  bool weak = false;
  int type_id = 0;  // 1..16, row order of the (m, p, s, nonweak) sign table

  bool operator==(const TypeVerdict&) const = default;
};

int type_id_from_flags(bool monotonic, bool proper, bool strong, bool weak);

// Decides the four axioms by exhaustive quantification over the carrier's
// subsets. Complements are taken within the carrier.
TypeVerdict analyze(const FiniteGame& g);

// Intersection of all winning coalitions; the whole carrier when there are
// none.
std::uint32_t veto_players(const FiniteGame& g);

bool is_dictatorial(const FiniteGame& g);

// Restriction of the determining-string game to the first `carrier` players:
// a mask wins iff its bit string has a prefix in T1. Requires every string
// to fit in the carrier and the sets to split the masks cleanly.
FiniteGame game_from_sets(const DeterminingSets& sets, int carrier);

// Classifies every game on the carrier {0..k-1} and reports which of the 16
// types occur. k is capped at 4 (65536 games).
std::set<int> exhaustive_search(int k);
std::set<int> exhaustive_search_serial(int k);

}  // namespace sgames
