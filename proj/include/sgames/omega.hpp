#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgames/detgame.hpp"
#include "sgames/machine.hpp"

namespace sgames {

// One stage of the staged game construction: the s-th admissible code k_s,
// its machine value phi = phi_{k_s}(2 k_s), the stage length l_s, and the
// stage's pinned p-strings F_s.
//
// l_0 = 2 k_0 + 2 and l_s = max(l_{s-1}, 2 k_s + 2). F_s holds every
// p-string of length l_s extending 10 whose bit at 2 k_s equals phi_s and
// whose bit at 2 k_{s'} equals 1 - phi_{s'} for every earlier stage s'.
struct StageData {
  std::size_t index = 0;
  CodeNumber code = 0;
  int phi = 0;
  std::size_t length = 0;
  std::vector<BitString> pinned;  // F_s in lexicographic order
};

struct StageSet {
  Numbering numbering = Numbering::Test;
  std::vector<StageData> stages;
  bool shortfall = false;
  std::string shortfall_reason;

  // The union F of all pinned sets, mapped to enumeration order: stages
  // ascending, lexicographic inside a stage. This is the bijection used by
  // the generating rules; it is defined exactly on F.
  std::map<BitString, std::size_t> f_order;

  std::optional<std::size_t> f_index(const BitString& s) const;
  bool in_f(const BitString& s) const { return f_order.count(s) != 0; }
  bool any_prefix_in_f(const BitString& s) const;

  std::size_t max_length() const;
};

using StagesPtr = std::shared_ptr<const StageSet>;

// Runs the dovetailer for `count` admissible codes and materializes the
// stage data. Stages whose pinned set would exceed 2^max_f_log2 strings are
// cut off with a shortfall flag rather than materialized.
StageSet compute_stages(Numbering nb, std::size_t count, std::uint64_t step_budget,
                        std::size_t max_f_log2 = 16);
StagesPtr compute_stages_shared(Numbering nb, std::size_t count, std::uint64_t step_budget,
                                std::size_t max_f_log2 = 16);

// Knobs for the T0/T1 generating algorithm. The defaults produce the base
// construction; the game variants are these same rules with different data,
// not separate code paths.
struct GenRules {
  // Rule A (prefix splitting): for alpha in F_s and each p-string alpha'
  // that is a proper prefix of alpha with s == 0 or |alpha'| >= l_{s-1},
  // emit alpha'*11 into T1 and alpha'*00 into T0.
  bool skip_empty_prefix = false;            // require alpha' nonempty
  std::vector<BitString> prefix_filter;      // alpha' must extend one of these
  // Rule B (pin placement): emit alpha into T1 when f(alpha) is in A, else
  // into T0.
  bool duplicate_complement_in_rule_b = false;  // also emit alpha^c alongside
  // Rule C (complement closure): each emitted string lands complemented in
  // the opposite set.
  bool rule_c_on_a = true;
  bool rule_c_on_b = true;
  bool rule_c_on_extras = false;
  std::set<BitString> rule_c_exceptions;
  // Wrap every rule A/B string with a leading 1; rule C then complements
  // only the part after the leading bit.
  bool prefix_one = false;
  // Fixed strings emitted once: (string, set index 0 or 1).
  std::vector<std::pair<BitString, int>> extras;
};

using Membership = std::function<bool(std::uint64_t)>;

Membership membership_of(const SetSpec& a);

DeterminingSets generate_sets(const StageSet& stages, const Membership& in_a,
                              const GenRules& rules = GenRules{});

struct OmegaGame {
  SetSpec a;
  StagesPtr stages;
  DeterminingSets sets;
};

OmegaGame make_omega(StagesPtr stages, const SetSpec& a);
Verdict eval_omega(const OmegaGame& game, const SetSpec& coalition, std::size_t depth);

// The canonical diagonal sequence dodging every stage pin: bit 2 k_s is
// 1 - phi_s for every computed stage, pairs are 10 elsewhere. Its initial
// segments keep both winning and losing extensions alive at every stage
// boundary, which is what the no-finite-carrier and nonweakness witnesses
// exploit.
BitString diagonal_prefix(const StageSet& stages, std::size_t len);

struct NonweakTriple {
  BitString all_pair;     // "11"
  BitString ten_side;     // extends 10
  BitString zeroone_side; // extends 01
  bool verified = false;  // all three in T1 with empty joint intersection
};

NonweakTriple nonweak_witnesses(const OmegaGame& game);

struct CarrierEscape {
  BitString stem;      // the diagonal prefix of the requested length
  BitString win_ext;   // extension of the stem in T1
  BitString lose_ext;  // extension of the stem in T0
};

CarrierEscape carrier_escape(const OmegaGame& game, std::size_t len);

// Per-string comparison of the direct snapshot answer ("does alpha extend a
// string in T1 / T0 / neither") against the rule-level characterization
// that never consults the snapshot:
//   T1 route: some stage-length prefix is in F with f-value in A, or alpha
//             extends a d-string ending 11 none of whose trunk prefixes is
//             in F. T0 route: the same with "not in A" and 00. Neither:
//             alpha is a p-string with no prefix in F.
// alpha must extend 1 and have some computed stage's length.
struct ExtensionReport {
  bool direct_t1 = false, rule_t1 = false;
  bool direct_t0 = false, rule_t0 = false;
  bool rule_neither = false;

  bool consistent() const {
    return direct_t1 == rule_t1 && direct_t0 == rule_t0 &&
           rule_neither == (!direct_t1 && !direct_t0);
  }
};

ExtensionReport check_extension_characterization(const OmegaGame& game,
                                                 const BitString& alpha);

struct SweepStats {
  std::uint64_t checked = 0;
  std::vector<BitString> violations;  // sorted

  bool pass() const { return violations.empty(); }
};

// Sweeps strings of stage-s length extending 1 and checks the report above.
// Exhaustive when the space is at most exhaustive_limit, otherwise `samples`
// seeded draws.
SweepStats extension_agreement(const OmegaGame& game, std::size_t stage,
                               std::size_t exhaustive_limit, std::size_t samples,
                               std::uint64_t seed);
SweepStats extension_agreement_serial(const OmegaGame& game, std::size_t stage,
                                      std::size_t exhaustive_limit, std::size_t samples,
                                      std::uint64_t seed);

// Sweeps p-strings of stage-s length extending 10, checking that "no prefix
// lies in F" coincides with "every stage pin is dodged".
SweepStats pinned_prefix_agreement(const StageSet& stages, std::size_t stage,
                                   std::size_t exhaustive_limit, std::size_t samples,
                                   std::uint64_t seed);

// Sweeps strings of stage-s length extending 1 whose bit at 2 k_s equals
// phi_s; each must extend some snapshot string.
SweepStats coverage_agreement(const OmegaGame& game, std::size_t stage,
                              std::size_t exhaustive_limit, std::size_t samples,
                              std::uint64_t seed);

struct ContainmentStats {
  std::uint64_t trials = 0;
  std::uint64_t applicable = 0;  // alpha extended a T1 string
  std::vector<std::pair<BitString, BitString>> violations;

  bool pass() const { return violations.empty(); }
};

// Random (alpha, beta) pairs with beta properly containing alpha, alpha of
// some stage length: whenever alpha extends a T1 string, beta must as well.
ContainmentStats containment_trials(const OmegaGame& game, std::size_t trials,
                                    std::uint64_t seed);

}  // namespace sgames
