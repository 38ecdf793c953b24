#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sgames/omega.hpp"

namespace sgames {

// Infinite computable games of the nine types beyond type 1, each realized
// either by re-running the staged generator with modified rule data or, for
// types 3 and 5, by intersecting/uniting the games over the empty and the
// full index set.
struct VariantGame {
  int type_id = 0;
  StagesPtr stages;
  std::optional<DeterminingSets> sets;       // generator-backed variants
  std::optional<OmegaGame> part_empty;       // composites
  std::optional<OmegaGame> part_full;
  bool intersect = false;

  bool composite() const { return part_empty.has_value(); }
};

const std::vector<int>& variant_type_ids();  // {3,4,5,7,9,11,12,13,15}

// Rule data per type; throws for ids outside the list.
GenRules variant_rules(int type_id);
// The index set fed to the generator: evens for type 7, everything for
// type 12, nothing for the rest.
Membership variant_membership(int type_id);

VariantGame build_variant(int type_id, StagesPtr stages);

Verdict eval_variant(const VariantGame& g, const SetSpec& coalition, std::size_t depth);

struct CoalitionCheck {
  SetSpec coalition;
  Verdict expected = Verdict::Undetermined;
  Verdict got = Verdict::Undetermined;

  bool ok() const { return expected == got; }
};

struct WitnessItem {
  std::string property;  // nonmonotonic | nonproper | nonstrong | weak | nonweak
  std::string detail;
  std::vector<CoalitionCheck> coalitions;
  bool verified = false;
};

struct WitnessBundle {
  int type_id = 0;
  std::vector<WitnessItem> items;

  bool all_verified() const;
};

// Coalitions certifying each negative axiom flag of the type, plus the
// empty-intersection or veto-player certificate for the fourth axiom, all
// re-checked against the game.
WitnessBundle variant_witness(const VariantGame& g, std::size_t depth = 64);

struct PositiveFlagStats {
  std::uint64_t trials = 0;
  std::uint64_t monotonic_violations = 0;
  std::uint64_t proper_violations = 0;
  std::uint64_t strong_violations = 0;

  bool pass() const {
    return monotonic_violations + proper_violations + strong_violations == 0;
  }
};

// Samples coalition pairs and complements, checking only the axioms the
// type claims: no winning coalition below a losing superset (monotonic
// types), no coalition winning alongside its complement (proper types), no
// coalition losing alongside its complement (strong types).
PositiveFlagStats positive_flag_trials(const VariantGame& g, std::size_t trials,
                                       std::uint64_t seed, std::size_t depth = 64);

}  // namespace sgames
