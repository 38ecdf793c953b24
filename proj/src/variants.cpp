#include "sgames/variants.hpp"

#include <algorithm>
#include <stdexcept>

#include "sgames/rng.hpp"

namespace sgames {

const std::vector<int>& variant_type_ids() {
  static const std::vector<int> ids = {3, 4, 5, 7, 9, 11, 12, 13, 15};
  return ids;
}

GenRules variant_rules(int type_id) {
  GenRules r;
  switch (type_id) {
    case 4:
      r.prefix_one = true;
      r.extras = {{BitString("0"), 0}};
      return r;
    case 7:
      r.duplicate_complement_in_rule_b = true;
      r.rule_c_on_b = false;
      return r;
    case 9:
      r.skip_empty_prefix = true;
      r.extras = {{BitString("00"), 1}};
      r.rule_c_on_extras = true;
      return r;
    case 11:
      r.skip_empty_prefix = true;
      r.extras = {{BitString("00"), 0}, {BitString("11"), 0}};
      r.rule_c_on_extras = true;
      r.rule_c_exceptions = {BitString("00"), BitString("11")};
      return r;
    case 12:
      r.prefix_filter = {BitString("1010"), BitString("1001")};
      r.extras = {{BitString("11"), 1},
                  {BitString("1000"), 1},
                  {BitString("1011"), 0},
                  {BitString("0"), 0}};
      r.rule_c_on_a = false;
      r.rule_c_on_b = false;
      return r;
    case 13:
      r.skip_empty_prefix = true;
      r.extras = {{BitString("00"), 1}, {BitString("11"), 1}};
      r.rule_c_on_extras = true;
      r.rule_c_exceptions = {BitString("00"), BitString("11")};
      return r;
    case 15:
      r.prefix_filter = {BitString("1010"), BitString("1001")};
      r.extras = {{BitString("00"), 0},   {BitString("1000"), 0},
                  {BitString("0111"), 0}, {BitString("11"), 1},
                  {BitString("1011"), 1}, {BitString("0100"), 1}};
      r.rule_c_on_extras = true;
      r.rule_c_exceptions = {BitString("00"),   BitString("11"),   BitString("1000"),
                             BitString("0111"), BitString("1011"), BitString("0100")};
      return r;
    case 3:
    case 5:
      throw std::invalid_argument("types 3 and 5 are composites, not generator variants");
    default:
      throw std::invalid_argument("no infinite variant for this type id");
  }
}

Membership variant_membership(int type_id) {
  switch (type_id) {
    case 7: return [](std::uint64_t n) { return n % 2 == 0; };
    case 12: return [](std::uint64_t) { return true; };
    default: return [](std::uint64_t) { return false; };
  }
}

VariantGame build_variant(int type_id, StagesPtr stages) {
  VariantGame g;
  g.type_id = type_id;
  g.stages = stages;
  if (type_id == 3 || type_id == 5) {
    g.part_empty = make_omega(stages, SetSpec::empty_set());
    g.part_full = make_omega(stages, SetSpec::full_set());
    g.intersect = type_id == 3;
    return g;
  }
  g.sets = generate_sets(*stages, variant_membership(type_id), variant_rules(type_id));
  return g;
}

Verdict eval_variant(const VariantGame& g, const SetSpec& coalition, std::size_t depth) {
  if (g.composite()) {
    Verdict a = eval_omega(*g.part_empty, coalition, depth);
    Verdict b = eval_omega(*g.part_full, coalition, depth);
    return g.intersect ? verdict_and(a, b) : verdict_or(a, b);
  }
  return eval(*g.sets, coalition, depth);
}

bool WitnessBundle::all_verified() const {
  return !items.empty() &&
         std::all_of(items.begin(), items.end(),
                     [](const WitnessItem& i) { return i.verified; });
}

namespace {

bool joint_intersection_empty(const std::vector<SetSpec>& coalitions) {
  std::size_t span = 1;
  bool all_tails = true;
  for (const SetSpec& c : coalitions) {
    span = std::max(span, c.prefix().size());
    all_tails = all_tails && c.tail() == 1;
  }
  if (all_tails) return false;  // cofinite sets always share large players
  for (std::size_t i = 0; i < span; ++i) {
    bool in_all = true;
    for (const SetSpec& c : coalitions) in_all = in_all && c.bit(i) == 1;
    if (in_all) return false;
  }
  return true;
}

// The first pinned string whose index satisfies the predicate, if one was
// surfaced within the stage cap.
std::optional<BitString> first_pinned_where(const StageSet& stages,
                                            const Membership& pred) {
  std::size_t f = 0;
  for (const StageData& st : stages.stages) {
    for (const BitString& alpha : st.pinned) {
      if (pred(f)) return alpha;
      ++f;
    }
  }
  return std::nullopt;
}

struct WitnessBuilder {
  const VariantGame& game;
  std::size_t depth;
  WitnessBundle bundle;

  CoalitionCheck check(const SetSpec& coalition, Verdict expected) const {
    return {coalition, expected, eval_variant(game, coalition, depth)};
  }

  void add(const std::string& property, const std::string& detail,
           std::vector<CoalitionCheck> checks, bool extra_ok = true) {
    WitnessItem item;
    item.property = property;
    item.detail = detail;
    item.verified = extra_ok;
    for (const CoalitionCheck& c : checks) item.verified = item.verified && c.ok();
    item.coalitions = std::move(checks);
    bundle.items.push_back(std::move(item));
  }

  void add_unavailable(const std::string& property, const std::string& detail) {
    WitnessItem item;
    item.property = property;
    item.detail = detail + " (not surfaced at this stage cap)";
    item.verified = false;
    bundle.items.push_back(std::move(item));
  }

  void losing_pair(const std::string& property, const SetSpec& s,
                   const std::string& detail) {
    add(property, detail, {check(s, Verdict::Losing), check(s.complemented(), Verdict::Losing)});
  }

  void winning_pair(const std::string& property, const SetSpec& s,
                    const std::string& detail) {
    add(property, detail,
        {check(s, Verdict::Winning), check(s.complemented(), Verdict::Winning)});
  }

  void nonweak_from_strings(const std::vector<BitString>& winners,
                            const std::string& detail) {
    std::vector<CoalitionCheck> checks;
    std::vector<SetSpec> coalitions;
    for (const BitString& w : winners) {
      SetSpec c(w, 0);
      coalitions.push_back(c);
      checks.push_back(check(c, Verdict::Winning));
    }
    add("nonweak", detail, std::move(checks), joint_intersection_empty(coalitions));
  }

  void veto_zero() {
    const DeterminingSets& sets = *game.sets;
    bool all_one = !sets.t1.empty();
    for (const BitString& s : sets.t1) all_one = all_one && s.bit(0) == 1;
    add("weak",
        "every winning-determining string begins with 1, so player 0 is a veto player",
        {}, all_one);
  }
};

}  // namespace

WitnessBundle variant_witness(const VariantGame& g, std::size_t depth) {
  const StageSet& stages = *g.stages;
  if (stages.stages.empty()) {
    throw std::runtime_error("no stages computed; witnesses unavailable");
  }
  WitnessBuilder b{g, depth, {}};
  b.bundle.type_id = g.type_id;

  const BitString first_f = stages.stages.front().pinned.front();

  auto dstring_triple = [&]() -> std::optional<std::vector<BitString>> {
    // The three winning d-strings built on the diagonal: 11, a completion
    // fixing the next stage pin, and the mirror of its 00 twin. All three
    // come from rule A plus complement closure, so every variant that keeps
    // those rules contains them.
    try {
      NonweakTriple t = nonweak_witnesses(g.composite() ? *g.part_empty
                                                        : make_omega(g.stages, SetSpec::empty_set()));
      return std::vector<BitString>{t.all_pair, t.ten_side, t.zeroone_side};
    } catch (const std::runtime_error&) {
      return std::nullopt;
    }
  };

  switch (g.type_id) {
    case 3: {
      b.losing_pair("nonstrong", SetSpec(first_f, 0),
                    "a pinned string's coalition and its complement both lose");
      if (auto t = dstring_triple()) {
        b.nonweak_from_strings(*t, "three winning coalitions with empty intersection");
      } else {
        b.add_unavailable("nonweak", "diagonal witness triple");
      }
      break;
    }
    case 4: {
      b.losing_pair("nonstrong", SetSpec(BitString("1"), 0),
                    "{0} and its complement both lose");
      b.veto_zero();
      break;
    }
    case 5: {
      b.winning_pair("nonproper", SetSpec(first_f, 0),
                     "a pinned string's coalition and its complement both win");
      if (auto t = dstring_triple()) {
        b.nonweak_from_strings(*t, "three winning coalitions with empty intersection");
      } else {
        b.add_unavailable("nonweak", "diagonal witness triple");
      }
      break;
    }
    case 7: {
      Membership in_a = variant_membership(7);
      auto even_f = first_pinned_where(stages, in_a);
      auto odd_f = first_pinned_where(stages, [&](std::uint64_t n) { return !in_a(n); });
      if (even_f) {
        b.winning_pair("nonproper", SetSpec(*even_f, 0),
                       "both sides of a pinned string with even index win");
      } else {
        b.add_unavailable("nonproper", "pinned string with even index");
      }
      if (odd_f) {
        b.losing_pair("nonstrong", SetSpec(*odd_f, 0),
                      "both sides of a pinned string with odd index lose");
      } else {
        b.add_unavailable("nonstrong", "pinned string with odd index");
      }
      if (auto t = dstring_triple()) {
        b.nonweak_from_strings(*t, "three winning coalitions with empty intersection");
      } else {
        b.add_unavailable("nonweak", "diagonal witness triple");
      }
      break;
    }
    case 9: {
      b.add("nonmonotonic", "the empty coalition wins while the full one loses",
            {b.check(SetSpec::empty_set(), Verdict::Winning),
             b.check(SetSpec::full_set(), Verdict::Losing)});
      b.add("nonweak", "the empty coalition wins, so the veto intersection is empty",
            {b.check(SetSpec::empty_set(), Verdict::Winning)});
      break;
    }
    case 11: {
      const BitString first_win = *g.sets->t1.begin();
      b.add("nonmonotonic", "a winning coalition below the losing full coalition",
            {b.check(SetSpec(first_win, 0), Verdict::Winning),
             b.check(SetSpec::full_set(), Verdict::Losing)});
      b.losing_pair("nonstrong", SetSpec(BitString("11"), 0),
                    "{0,1} and its complement both lose");
      // Three winners with empty intersection need two separate strict
      // length increases: one seeds a short d-string, the next a pair of
      // longer ones on the diagonal.
      std::optional<std::size_t> t, s;
      for (std::size_t i = 0; i + 1 < stages.stages.size(); ++i) {
        if (stages.stages[i + 1].length <= stages.stages[i].length) continue;
        if (!t) {
          t = i;
        } else if (stages.stages[i].length > stages.stages[*t + 1].length) {
          s = i;
          break;
        }
      }
      if (t && s) {
        BitString beta = diagonal_prefix(stages, stages.stages[*t].length);
        // Recompute the stage-(t+1) completion the same way the base
        // witnesses do, then shift to stage s+1 for the other two strings.
        OmegaGame base = make_omega(g.stages, SetSpec::empty_set());
        CarrierEscape low = carrier_escape(base, stages.stages[*t].length);
        CarrierEscape high = carrier_escape(base, stages.stages[*s].length);
        std::vector<BitString> winners = {low.win_ext, high.win_ext,
                                          high.lose_ext.complement()};
        b.nonweak_from_strings(winners, "three winning coalitions with empty intersection");
      } else {
        b.add_unavailable("nonweak", "two strict stage-length increases");
      }
      break;
    }
    case 12: {
      b.add("nonmonotonic", "{0} wins but the larger {0,2,3} loses",
            {b.check(SetSpec(BitString("1000"), 0), Verdict::Winning),
             b.check(SetSpec(BitString("1011"), 0), Verdict::Losing)});
      b.losing_pair("nonstrong", SetSpec(BitString("01"), 0),
                    "{1} and its complement both lose");
      b.veto_zero();
      break;
    }
    case 13: {
      b.add("nonmonotonic", "the empty coalition wins while a pinned coalition loses",
            {b.check(SetSpec::empty_set(), Verdict::Winning),
             b.check(SetSpec(first_f, 0), Verdict::Losing)});
      b.winning_pair("nonproper", SetSpec(BitString("11"), 0),
                     "{0,1} and its complement both win");
      b.add("nonweak", "the empty coalition wins, so the veto intersection is empty",
            {b.check(SetSpec::empty_set(), Verdict::Winning)});
      break;
    }
    case 15: {
      b.add("nonmonotonic", "{1} wins but the larger {1,2,3} loses",
            {b.check(SetSpec(BitString("0100"), 0), Verdict::Winning),
             b.check(SetSpec(BitString("0111"), 0), Verdict::Losing)});
      b.winning_pair("nonproper", SetSpec(BitString("01"), 0),
                     "{1} and its complement both win");
      b.losing_pair("nonstrong", SetSpec(BitString("1"), 0),
                    "{0} and its complement both lose");
      b.nonweak_from_strings({BitString("0100"), BitString("1011")},
                             "two disjoint winning coalitions");
      break;
    }
    default:
      throw std::invalid_argument("no infinite variant for this type id");
  }
  return b.bundle;
}

PositiveFlagStats positive_flag_trials(const VariantGame& g, std::size_t trials,
                                       std::uint64_t seed, std::size_t depth) {
  const bool check_monotonic = g.type_id == 3 || g.type_id == 4 || g.type_id == 5 ||
                               g.type_id == 7;
  const bool check_proper = g.type_id == 3 || g.type_id == 4 || g.type_id == 9 ||
                            g.type_id == 11 || g.type_id == 12;
  const bool check_strong = g.type_id == 5 || g.type_id == 9 || g.type_id == 13;

  PositiveFlagStats stats;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(seed ^ (0x9e3779b97f4a7c15ull * (i + 1)));
    std::string bits;
    for (std::uint64_t j = rng.below(11); j > 0; --j) bits.push_back(rng.bit() ? '1' : '0');
    SetSpec s(BitString(bits), rng.bit());
    ++stats.trials;

    if (check_monotonic) {
      std::string sup = bits;
      for (char& c : sup) {
        if (c == '0' && rng.bit()) c = '1';
      }
      SetSpec t(BitString(sup), s.tail() == 1 ? 1 : rng.bit());
      if (eval_variant(g, s, depth) == Verdict::Winning &&
          eval_variant(g, t, depth) == Verdict::Losing) {
        ++stats.monotonic_violations;
      }
    }
    Verdict vs = eval_variant(g, s, depth);
    Verdict vc = eval_variant(g, s.complemented(), depth);
    if (check_proper && vs == Verdict::Winning && vc == Verdict::Winning) {
      ++stats.proper_violations;
    }
    if (check_strong && vs == Verdict::Losing && vc == Verdict::Losing) {
      ++stats.strong_violations;
    }
  }
  return stats;
}

}  // namespace sgames
