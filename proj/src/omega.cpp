#include "sgames/omega.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sgames/rng.hpp"

namespace sgames {

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  return seed ^ (0x9e3779b97f4a7c15ull * (salt + 1));
}

bool extends_member(const std::set<BitString>& strings, const BitString& x) {
  for (std::size_t len = 1; len <= x.size(); ++len) {
    if (strings.count(x.prefix(len))) return true;
  }
  return false;
}

}  // namespace

std::optional<std::size_t> StageSet::f_index(const BitString& s) const {
  auto it = f_order.find(s);
  if (it == f_order.end()) return std::nullopt;
  return it->second;
}

bool StageSet::any_prefix_in_f(const BitString& s) const {
  // F only holds strings of stage lengths, all even and >= 4.
  for (const StageData& st : stages) {
    if (st.length > s.size()) break;
    if (f_order.count(s.prefix(st.length))) return true;
  }
  return false;
}

std::size_t StageSet::max_length() const {
  return stages.empty() ? 0 : stages.back().length;
}

StageSet compute_stages(Numbering nb, std::size_t count, std::uint64_t step_budget,
                        std::size_t max_f_log2) {
  StageSet out;
  out.numbering = nb;
  AdmissibleStream stream = enumerate_admissible(nb, count, step_budget);
  if (stream.codes.size() < count) {
    out.shortfall = true;
    std::ostringstream os;
    os << "step budget exhausted after " << stream.codes.size() << " of " << count
       << " admissible codes";
    out.shortfall_reason = os.str();
  }

  std::size_t length = 0;
  for (std::size_t s = 0; s < stream.codes.size(); ++s) {
    StageData stage;
    stage.index = s;
    stage.code = stream.codes[s];
    stage.phi = stream.values[s];
    length = std::max(length, static_cast<std::size_t>(2 * stage.code + 2));
    stage.length = length;

    // First bit of every constrained pair; unconstrained pairs are free.
    std::map<std::size_t, int> pin;
    pin[0] = 1;  // the strings extend 10
    for (std::size_t t = 0; t < s; ++t) {
      pin[static_cast<std::size_t>(out.stages[t].code)] = 1 - out.stages[t].phi;
    }
    pin[static_cast<std::size_t>(stage.code)] = stage.phi;

    std::vector<std::size_t> free_pairs;
    for (std::size_t j = 0; j < length / 2; ++j) {
      if (!pin.count(j)) free_pairs.push_back(j);
    }
    if (free_pairs.size() > max_f_log2) {
      out.shortfall = true;
      std::ostringstream os;
      os << "stage " << s << " would pin 2^" << free_pairs.size() << " strings";
      out.shortfall_reason = os.str();
      break;
    }

    for (std::uint64_t v = 0; v < (std::uint64_t{1} << free_pairs.size()); ++v) {
      std::string bits(length, '0');
      for (std::size_t j = 0; j < length / 2; ++j) {
        int first;
        if (auto it = pin.find(j); it != pin.end()) {
          first = it->second;
        } else {
          std::size_t pos =
              std::lower_bound(free_pairs.begin(), free_pairs.end(), j) - free_pairs.begin();
          // Leftmost free pair rides the counter's top bit; 0 spells "01"
          // so ascending v is ascending lexicographic order.
          first = (v >> (free_pairs.size() - 1 - pos)) & 1;
        }
        bits[2 * j] = first ? '1' : '0';
        bits[2 * j + 1] = first ? '0' : '1';
      }
      stage.pinned.push_back(BitString(bits));
    }
    out.stages.push_back(std::move(stage));
  }

  std::size_t next = 0;
  for (const StageData& st : out.stages) {
    for (const BitString& s : st.pinned) out.f_order.emplace(s, next++);
  }
  return out;
}

StagesPtr compute_stages_shared(Numbering nb, std::size_t count, std::uint64_t step_budget,
                                std::size_t max_f_log2) {
  return std::make_shared<StageSet>(compute_stages(nb, count, step_budget, max_f_log2));
}

Membership membership_of(const SetSpec& a) {
  return [a](std::uint64_t n) { return a.bit(static_cast<std::size_t>(n)) == 1; };
}

DeterminingSets generate_sets(const StageSet& stages, const Membership& in_a,
                              const GenRules& rules) {
  const BitString one("1");
  auto wrap = [&](const BitString& s) { return rules.prefix_one ? one + s : s; };
  auto rule_c_image = [&](const BitString& s) {
    if (!rules.prefix_one) return s.complement();
    return s.prefix(1) + s.drop_front(1).complement();
  };

  std::vector<std::pair<BitString, int>> emitted_a, emitted_b;
  for (const StageData& st : stages.stages) {
    for (const BitString& alpha : st.pinned) {
      // Rule A: split off each eligible proper p-string prefix.
      for (std::size_t m = 0; m + 2 <= st.length; m += 2) {
        if (st.index > 0 && m < stages.stages[st.index - 1].length) continue;
        if (rules.skip_empty_prefix && m == 0) continue;
        BitString prefix = alpha.prefix(m);
        if (!rules.prefix_filter.empty()) {
          bool ok = false;
          for (const BitString& want : rules.prefix_filter) {
            if (prefix.extends(want)) {
              ok = true;
              break;
            }
          }
          if (!ok) continue;
        }
        emitted_a.emplace_back(wrap(prefix.append(1).append(1)), 1);
        emitted_a.emplace_back(wrap(prefix.append(0).append(0)), 0);
      }
      // Rule B: the pinned string itself goes where its index points.
      int side = in_a(stages.f_order.at(alpha)) ? 1 : 0;
      emitted_b.emplace_back(wrap(alpha), side);
      if (rules.duplicate_complement_in_rule_b) {
        emitted_b.emplace_back(wrap(alpha.complement()), side);
      }
    }
  }

  DeterminingSets out;
  auto emit = [&](const BitString& s, int side) {
    (side ? out.t1 : out.t0).insert(s);
  };
  auto close = [&](const std::vector<std::pair<BitString, int>>& batch) {
    for (const auto& [s, side] : batch) {
      if (rules.rule_c_exceptions.count(s)) continue;
      emit(rule_c_image(s), 1 - side);
    }
  };

  for (const auto& [s, side] : emitted_a) emit(s, side);
  for (const auto& [s, side] : emitted_b) emit(s, side);
  for (const auto& [s, side] : rules.extras) emit(s, side);
  if (rules.rule_c_on_a) close(emitted_a);
  if (rules.rule_c_on_b) close(emitted_b);
  if (rules.rule_c_on_extras) close(rules.extras);
  return out;
}

OmegaGame make_omega(StagesPtr stages, const SetSpec& a) {
  OmegaGame g;
  g.a = a;
  g.stages = std::move(stages);
  g.sets = generate_sets(*g.stages, membership_of(a));
  return g;
}

Verdict eval_omega(const OmegaGame& game, const SetSpec& coalition, std::size_t depth) {
  return eval(game.sets, coalition, depth);
}

BitString diagonal_prefix(const StageSet& stages, std::size_t len) {
  std::map<std::size_t, int> pin;
  pin[0] = 1;
  for (const StageData& st : stages.stages) {
    pin[static_cast<std::size_t>(st.code)] = 1 - st.phi;
  }
  std::string bits(len, '0');
  for (std::size_t p = 0; p < len; ++p) {
    std::size_t pair = p / 2;
    auto it = pin.find(pair);
    int first = it != pin.end() ? it->second : 1;
    bits[p] = (p % 2 == 0 ? first : 1 - first) ? '1' : '0';
  }
  return BitString(bits);
}

namespace {

// The pinned string of stage s+1 that continues the diagonal: it agrees
// with the diagonal below l_s and satisfies the stage-(s+1) pin, so it sits
// in F_{s+1} while extending a prefix every earlier stage left undecided.
// Requires l_{s+1} > l_s.
BitString diagonal_pinned_extension(const StageSet& stages, std::size_t s) {
  const StageData& next = stages.stages.at(s + 1);
  BitString alpha = diagonal_prefix(stages, next.length);
  std::string bits = alpha.str();
  const std::size_t k2 = 2 * static_cast<std::size_t>(next.code);
  bits[k2] = next.phi ? '1' : '0';
  bits[k2 + 1] = next.phi ? '0' : '1';
  BitString out(bits);
  if (!stages.f_order.count(out)) {
    throw std::logic_error("diagonal extension missed the pinned set");
  }
  return out;
}

std::optional<std::size_t> first_strict_increase(const StageSet& stages,
                                                 std::size_t min_length) {
  for (std::size_t s = 0; s + 1 < stages.stages.size(); ++s) {
    if (stages.stages[s].length >= min_length &&
        stages.stages[s + 1].length > stages.stages[s].length) {
      return s;
    }
  }
  return std::nullopt;
}

}  // namespace

NonweakTriple nonweak_witnesses(const OmegaGame& game) {
  auto s = first_strict_increase(*game.stages, 0);
  if (!s) {
    throw std::runtime_error(
        "no stage with a strict length increase within the stage cap; "
        "raise the cap to surface the witnesses");
  }
  BitString alpha = diagonal_pinned_extension(*game.stages, *s);
  NonweakTriple t;
  t.all_pair = BitString("11");
  t.ten_side = alpha.drop_back(2).append(1).append(1);
  t.zeroone_side = alpha.drop_back(2).complement().append(1).append(1);

  bool members = game.sets.t1.count(t.all_pair) && game.sets.t1.count(t.ten_side) &&
                 game.sets.t1.count(t.zeroone_side);
  bool disjoint = true;
  const std::size_t span =
      std::max({t.all_pair.size(), t.ten_side.size(), t.zeroone_side.size()});
  for (std::size_t p = 0; p < span && disjoint; ++p) {
    auto bit = [&](const BitString& w) { return p < w.size() && w.bit(p) == 1; };
    if (bit(t.all_pair) && bit(t.ten_side) && bit(t.zeroone_side)) disjoint = false;
  }
  t.verified = members && disjoint;
  return t;
}

CarrierEscape carrier_escape(const OmegaGame& game, std::size_t len) {
  const StageSet& stages = *game.stages;
  if (len > stages.max_length()) {
    throw std::invalid_argument("length beyond the computed stages");
  }
  std::optional<std::size_t> s;
  for (std::size_t i = 0; i + 1 < stages.stages.size(); ++i) {
    if (stages.stages[i].length >= len &&
        stages.stages[i + 1].length > stages.stages[i].length) {
      s = i;
      break;
    }
  }
  if (!s) {
    throw std::runtime_error("no strict stage-length increase past the requested length");
  }
  BitString alpha = diagonal_pinned_extension(stages, *s);
  CarrierEscape esc;
  esc.stem = diagonal_prefix(stages, len);
  esc.win_ext = alpha.drop_back(2).append(1).append(1);
  esc.lose_ext = alpha.drop_back(2).append(0).append(0);
  if (!esc.win_ext.extends(esc.stem) || !esc.lose_ext.extends(esc.stem) ||
      !game.sets.t1.count(esc.win_ext) || !game.sets.t0.count(esc.lose_ext)) {
    throw std::logic_error("carrier escape witnesses failed verification");
  }
  return esc;
}

ExtensionReport check_extension_characterization(const OmegaGame& game,
                                                 const BitString& alpha) {
  if (alpha.empty() || alpha.bit(0) != 1) {
    throw std::invalid_argument("string must extend 1");
  }
  const StageSet& stages = *game.stages;
  bool stage_length = false;
  for (const StageData& st : stages.stages) stage_length |= st.length == alpha.size();
  if (!stage_length) throw std::invalid_argument("string length is not a stage length");

  Membership in_a = membership_of(game.a);
  ExtensionReport r;
  r.direct_t1 = extends_member(game.sets.t1, alpha);
  r.direct_t0 = extends_member(game.sets.t0, alpha);

  for (const StageData& st : stages.stages) {
    if (st.length > alpha.size()) break;
    if (auto f = stages.f_index(alpha.prefix(st.length))) {
      (in_a(*f) ? r.rule_t1 : r.rule_t0) = true;
    }
  }
  for (std::size_t m = 2; m <= alpha.size(); m += 2) {
    if (alpha.bit(m - 2) != alpha.bit(m - 1)) continue;
    BitString trunk = alpha.prefix(m - 2);
    if (!is_p_string(trunk) || stages.any_prefix_in_f(trunk)) continue;
    (alpha.bit(m - 2) ? r.rule_t1 : r.rule_t0) = true;
  }
  r.rule_neither = is_p_string(alpha) && !stages.any_prefix_in_f(alpha);
  return r;
}

namespace {

BitString nth_string_extending_one(std::uint64_t v, std::size_t len) {
  std::string bits(len, '0');
  bits[0] = '1';
  for (std::size_t i = 1; i < len; ++i) {
    bits[i] = (v >> (len - 1 - i)) & 1 ? '1' : '0';
  }
  return BitString(bits);
}

BitString random_string_extending_one(Rng& rng, std::size_t len) {
  std::string bits(len, '0');
  bits[0] = '1';
  for (std::size_t i = 1; i < len; ++i) bits[i] = rng.bit() ? '1' : '0';
  return BitString(bits);
}

template <typename CheckFn>
SweepStats sweep_extending_one(std::size_t len, std::size_t exhaustive_limit,
                               std::size_t samples, std::uint64_t seed, CheckFn check,
                               bool parallel) {
  SweepStats stats;
  std::vector<BitString> violations;
  const bool exhaustive =
      len - 1 < 63 && (std::uint64_t{1} << (len - 1)) <= exhaustive_limit;
  const std::int64_t total =
      exhaustive ? std::int64_t{1} << (len - 1) : static_cast<std::int64_t>(samples);

#pragma omp parallel if (parallel)
  {
    std::vector<BitString> local;
#pragma omp for nowait schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
      BitString alpha;
      if (exhaustive) {
        alpha = nth_string_extending_one(static_cast<std::uint64_t>(i), len);
      } else {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(i)));
        alpha = random_string_extending_one(rng, len);
      }
      if (!check(alpha)) local.push_back(alpha);
    }
#pragma omp critical
    violations.insert(violations.end(), local.begin(), local.end());
  }
  stats.checked = static_cast<std::uint64_t>(total);
  std::sort(violations.begin(), violations.end());
  violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
  stats.violations = std::move(violations);
  return stats;
}

}  // namespace

SweepStats extension_agreement(const OmegaGame& game, std::size_t stage,
                               std::size_t exhaustive_limit, std::size_t samples,
                               std::uint64_t seed) {
  const std::size_t len = game.stages->stages.at(stage).length;
  return sweep_extending_one(
      len, exhaustive_limit, samples, mix_seed(seed, stage),
      [&](const BitString& a) { return check_extension_characterization(game, a).consistent(); },
      /*parallel=*/true);
}

SweepStats extension_agreement_serial(const OmegaGame& game, std::size_t stage,
                                      std::size_t exhaustive_limit, std::size_t samples,
                                      std::uint64_t seed) {
  const std::size_t len = game.stages->stages.at(stage).length;
  return sweep_extending_one(
      len, exhaustive_limit, samples, mix_seed(seed, stage),
      [&](const BitString& a) { return check_extension_characterization(game, a).consistent(); },
      /*parallel=*/false);
}

SweepStats pinned_prefix_agreement(const StageSet& stages, std::size_t stage,
                                   std::size_t exhaustive_limit, std::size_t samples,
                                   std::uint64_t seed) {
  const StageData& st = stages.stages.at(stage);
  const std::size_t pairs = st.length / 2;
  auto nth_p_string = [&](std::uint64_t v) {
    std::string bits(st.length, '0');
    bits[0] = '1';
    for (std::size_t j = 1; j < pairs; ++j) {
      int first = (v >> (pairs - 1 - j)) & 1;
      bits[2 * j] = first ? '1' : '0';
      bits[2 * j + 1] = first ? '0' : '1';
    }
    return BitString(bits);
  };
  auto check = [&](const BitString& alpha) {
    bool no_prefix_in_f = !stages.any_prefix_in_f(alpha);
    bool dodges_all_pins = true;
    for (const StageData& t : stages.stages) {
      if (t.length > alpha.size()) break;
      if (alpha.bit(2 * static_cast<std::size_t>(t.code)) != 1 - t.phi) {
        dodges_all_pins = false;
        break;
      }
    }
    return no_prefix_in_f == dodges_all_pins;
  };

  SweepStats stats;
  const bool exhaustive =
      pairs - 1 < 63 && (std::uint64_t{1} << (pairs - 1)) <= exhaustive_limit;
  const std::uint64_t total = exhaustive ? std::uint64_t{1} << (pairs - 1) : samples;
  for (std::uint64_t i = 0; i < total; ++i) {
    BitString alpha;
    if (exhaustive) {
      alpha = nth_p_string(i);
    } else {
      Rng rng(mix_seed(seed, i));
      alpha = nth_p_string(rng.next() & ((std::uint64_t{1} << (pairs - 1)) - 1));
    }
    ++stats.checked;
    if (!check(alpha)) stats.violations.push_back(alpha);
  }
  std::sort(stats.violations.begin(), stats.violations.end());
  stats.violations.erase(std::unique(stats.violations.begin(), stats.violations.end()),
                         stats.violations.end());
  return stats;
}

SweepStats coverage_agreement(const OmegaGame& game, std::size_t stage,
                              std::size_t exhaustive_limit, std::size_t samples,
                              std::uint64_t seed) {
  const StageData& st = game.stages->stages.at(stage);
  const std::size_t len = st.length;
  const std::size_t pin_pos = 2 * static_cast<std::size_t>(st.code);
  auto pin = [&](BitString a) {
    std::string bits = a.str();
    bits[pin_pos] = st.phi ? '1' : '0';
    return BitString(bits);
  };
  auto check = [&](const BitString& alpha) {
    return extends_member(game.sets.t0, alpha) || extends_member(game.sets.t1, alpha);
  };
  // Reuse the extends-1 sweep and force the stage pin; the pinned position
  // is never position 0 because admissible codes are nonzero.
  SweepStats stats;
  const bool exhaustive =
      len - 1 < 63 && (std::uint64_t{1} << (len - 1)) <= exhaustive_limit;
  const std::uint64_t total = exhaustive ? std::uint64_t{1} << (len - 1) : samples;
  std::set<BitString> seen;
  for (std::uint64_t i = 0; i < total; ++i) {
    BitString alpha;
    if (exhaustive) {
      alpha = pin(nth_string_extending_one(i, len));
      if (!seen.insert(alpha).second) continue;  // the pin folds pairs of strings
    } else {
      Rng rng(mix_seed(seed, i));
      alpha = pin(random_string_extending_one(rng, len));
    }
    ++stats.checked;
    if (!check(alpha)) stats.violations.push_back(alpha);
  }
  std::sort(stats.violations.begin(), stats.violations.end());
  stats.violations.erase(std::unique(stats.violations.begin(), stats.violations.end()),
                         stats.violations.end());
  return stats;
}

ContainmentStats containment_trials(const OmegaGame& game, std::size_t trials,
                                    std::uint64_t seed) {
  ContainmentStats stats;
  const StageSet& stages = *game.stages;
  if (stages.stages.empty()) return stats;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(mix_seed(seed, i));
    const StageData& st = stages.stages[rng.below(stages.stages.size())];
    const std::size_t len = st.length;

    std::string abits(len, '0');
    for (std::size_t p = 0; p < len; ++p) abits[p] = rng.bit() ? '1' : '0';
    if (abits.find('0') == std::string::npos) {
      abits[rng.below(len)] = '0';
    }
    BitString alpha(abits);

    std::string bbits = abits;
    bool flipped = false;
    for (std::size_t p = 0; p < len; ++p) {
      if (bbits[p] == '0' && rng.bit()) {
        bbits[p] = '1';
        flipped = true;
      }
    }
    if (!flipped) {
      std::size_t zeros = 0;
      for (char c : bbits) zeros += c == '0';
      std::size_t target = rng.below(zeros);
      for (std::size_t p = 0; p < len; ++p) {
        if (bbits[p] == '0' && target-- == 0) {
          bbits[p] = '1';
          break;
        }
      }
    }
    const std::size_t extra = rng.below(5);
    for (std::size_t e = 0; e < extra; ++e) bbits.push_back(rng.bit() ? '1' : '0');
    BitString beta(bbits);

    ++stats.trials;
    if (!extends_member(game.sets.t1, alpha)) continue;
    ++stats.applicable;
    if (!extends_member(game.sets.t1, beta)) {
      stats.violations.emplace_back(alpha, beta);
    }
  }
  std::sort(stats.violations.begin(), stats.violations.end());
  return stats;
}

}  // namespace sgames
