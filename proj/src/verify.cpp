#include "sgames/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "sgames/axioms.hpp"
#include "sgames/noncomp.hpp"
#include "sgames/rng.hpp"
#include "sgames/variants.hpp"

namespace sgames {

namespace {

struct Suite {
  std::vector<CheckResult> results;

  void add(const std::string& id, bool pass, const std::string& detail) {
    results.push_back({id, pass, detail});
  }
};

std::string str(std::size_t n) { return std::to_string(n); }

// Every prefix length from 1 up to 6, both tails: a small but complete
// family of coalition shapes for exhaustive-style checks.
std::vector<SetSpec> coalition_family(std::size_t max_prefix) {
  std::vector<SetSpec> out;
  for (std::size_t len = 0; len <= max_prefix; ++len) {
    for (const BitString& p : all_strings(len)) {
      out.emplace_back(p, 0);
      out.emplace_back(p, 1);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SetSpec random_coalition(Rng& rng, std::size_t max_prefix) {
  std::size_t len = rng.below(max_prefix + 1);
  std::string bits;
  for (std::size_t i = 0; i < len; ++i) bits.push_back(rng.bit() ? '1' : '0');
  return SetSpec(BitString(bits), rng.bit());
}

StageSet truncated(const StageSet& full, std::size_t count) {
  StageSet out;
  out.numbering = full.numbering;
  out.stages.assign(full.stages.begin(),
                    full.stages.begin() + std::min(count, full.stages.size()));
  std::size_t next = 0;
  for (const StageData& st : out.stages) {
    for (const BitString& s : st.pinned) out.f_order.emplace(s, next++);
  }
  return out;
}

// ---------------------------------------------------------------- finite --

void finite_suite(Suite& s, const VerifyOptions& opt) {
  bool partition_ok = true, incompat_ok = true, types_ok = true, decided_ok = true;
  std::string partition_detail, types_detail;
  for (int id : finite_example_ids()) {
    DeterminingSets sets = finite_example(id);
    const int carrier = static_cast<int>(sets.max_length());
    PartitionReport report = partition_check(sets, carrier, true);
    if (!report.pass) {
      partition_ok = false;
      partition_detail += " type " + str(id);
    }
    if (!compatibility_violations(sets.all_strings_sorted()).empty()) incompat_ok = false;

    TypeVerdict v = analyze(game_from_sets(sets, carrier));
    if (v.type_id != id) {
      types_ok = false;
      types_detail += " type " + str(id) + "->" + str(v.type_id);
    }
    for (const SetSpec& c : coalition_family(6)) {
      if (eval(sets, c, sets.max_length()) == Verdict::Undetermined) decided_ok = false;
    }
  }
  s.add("finite.catalogue-partition", partition_ok,
        partition_ok ? "11 examples split every coalition exactly once"
                     : "failures:" + partition_detail);
  s.add("finite.catalogue-incompatible", incompat_ok,
        "pairwise incompatibility of T0 u T1 per example");
  s.add("finite.catalogue-types", types_ok,
        types_ok ? "all 11 examples classify to their own type" : types_detail);
  s.add("finite.catalogue-decided", decided_ok,
        "every coalition with prefix <= 6 decided at the example's depth");

  std::set<int> empty_types = {6, 8, 10, 14, 16};
  std::set<int> expected4 = {1, 2, 3, 4, 5, 7, 9, 11, 12, 13, 15};
  std::set<int> found3 = exhaustive_search(3);
  std::set<int> found4 = exhaustive_search(4);
  bool none3 = std::none_of(empty_types.begin(), empty_types.end(),
                            [&](int t) { return found3.count(t); });
  s.add("finite.empty-types", none3 && found4 == expected4,
        "carrier-3 sweep avoids the five empty types; carrier-4 sweep realizes "
        "exactly the eleven others");

  bool serial_match = true;
  for (int k = 0; k <= 4; ++k) {
    serial_match = serial_match && exhaustive_search(k) == exhaustive_search_serial(k);
  }
  s.add("finite.search-kernels-agree", serial_match,
        "parallel and serial sweeps report identical type sets for carriers 0..4");

  bool weak_proper = true, dict_iff = true;
  std::uint64_t games_checked = 0;
  for (int k = 1; k <= 3; ++k) {
    const std::uint32_t games = 1u << (1u << k);
    for (std::uint32_t w = 0; w < games; ++w) {
      FiniteGame g{k, w};
      TypeVerdict v = analyze(g);
      if (v.weak && !v.proper) weak_proper = false;
      if (is_dictatorial(g) != (v.strong && v.weak)) dict_iff = false;
      ++games_checked;
    }
  }
  s.add("finite.weak-implies-proper", weak_proper,
        str(games_checked) + " games on carriers 1..3, zero counterexamples");
  s.add("finite.dictatorial-iff-strong-and-weak", dict_iff,
        str(games_checked) + " games on carriers 1..3, zero counterexamples");

  bool stable = true;
  Rng rng(opt.seed);
  for (std::size_t i = 0; i < opt.samples / 10; ++i) {
    int id = finite_example_ids()[rng.below(finite_example_ids().size())];
    DeterminingSets sets = finite_example(id);
    SetSpec c = random_coalition(rng, 6);
    Verdict last = Verdict::Undetermined;
    for (std::size_t d = 0; d <= sets.max_length() + 2; ++d) {
      Verdict v = eval(sets, c, d);
      if (last != Verdict::Undetermined && v != last) stable = false;
      last = v;
    }
  }
  s.add("finite.verdict-stability", stable,
        str(opt.samples / 10) + " sampled coalitions never flip across depths");
}

// ----------------------------------------------------------------- omega --

void omega_suite(Suite& s, const VerifyOptions& opt) {
  StagesPtr stages = compute_stages_shared(opt.numbering, opt.stages, opt.budget);
  const StageSet& st = *stages;

  {
    bool ok = !st.stages.empty();
    std::size_t f_total = 0;
    for (std::size_t i = 0; i < st.stages.size(); ++i) {
      const StageData& d = st.stages[i];
      ok = ok && d.length % 2 == 0 && d.length > 2 * d.code + 1 && d.code >= 1;
      if (i == 0) {
        ok = ok && d.length == 2 * d.code + 2 && d.length >= 4;
      } else {
        ok = ok && d.length >= st.stages[i - 1].length;
      }
      for (std::size_t j = 0; j < i; ++j) ok = ok && st.stages[j].code != d.code;
      // Pins recomputed straight from the machine.
      for (const BitString& alpha : d.pinned) {
        ok = ok && is_p_string(alpha) && alpha.size() == d.length && alpha.bit(0) == 1 &&
             alpha.bit(1) == 0;
        RunResult self = run(st.numbering, d.code, 2 * d.code, opt.budget);
        ok = ok && self.halted() && alpha.bit(2 * d.code) == static_cast<int>(*self.output);
        for (std::size_t j = 0; j < i; ++j) {
          RunResult other =
              run(st.numbering, st.stages[j].code, 2 * st.stages[j].code, opt.budget);
          ok = ok && alpha.bit(2 * st.stages[j].code) == 1 - static_cast<int>(*other.output);
        }
      }
      f_total += d.pinned.size();
    }
    ok = ok && st.f_order.size() == f_total;
    s.add("omega.stage-structure", ok,
          str(st.stages.size()) + " stages, " + str(f_total) +
              " pinned strings, lengths and pins verified against the machine");
  }

  {
    std::vector<BitString> f_strings;
    for (const StageData& d : st.stages) {
      f_strings.insert(f_strings.end(), d.pinned.begin(), d.pinned.end());
    }
    s.add("omega.pins-incompatible", compatibility_violations(f_strings).empty(),
          "all pinned strings pairwise incompatible");

    bool bijection = true;
    for (std::size_t i = 0; i < f_strings.size(); ++i) {
      bijection = bijection && st.f_index(f_strings[i]) == i;
    }
    bijection = bijection && (!st.stages.empty() &&
                              st.f_index(st.stages[0].pinned[0]) == std::size_t{0});
    s.add("omega.pin-order-bijection", bijection,
          "enumeration order is stage-ascending then lexicographic, onto 0.." +
              str(f_strings.empty() ? 0 : f_strings.size() - 1));
  }

  {
    bool ok = true;
    std::string detail;
    for (std::size_t stage = 0; stage < st.stages.size(); ++stage) {
      SweepStats stats =
          pinned_prefix_agreement(st, stage, opt.exhaustive_limit, opt.samples, opt.seed);
      if (!stats.pass()) {
        ok = false;
        detail += " stage " + str(stage);
      }
    }
    s.add("omega.pinned-prefix-agreement", ok,
          ok ? "pin dodging coincides with F-freeness at every stage" : detail);
  }

  for (const char* name : {"empty", "full"}) {
    const std::string tag = std::string("omega[") + name + "]";
    SetSpec a = name == std::string("empty") ? SetSpec::empty_set() : SetSpec::full_set();
    OmegaGame game = make_omega(stages, a);

    s.add(tag + ".snapshot-incompatible",
          compatibility_violations(game.sets.all_strings_sorted()).empty(),
          str(game.sets.t0.size() + game.sets.t1.size()) + " snapshot strings");

    {
      bool duality = game.sets.t0.size() == game.sets.t1.size();
      for (const BitString& x : game.sets.t0) duality = duality && game.sets.t1.count(x.complement());
      for (const BitString& x : game.sets.t1) duality = duality && game.sets.t0.count(x.complement());
      s.add(tag + ".duality", duality, "T0 and T1 are complements of each other");
    }

    s.add(tag + ".base-strings",
          game.sets.t1.count(BitString("11")) && game.sets.t0.count(BitString("00")) &&
              !game.sets.t0.count(BitString("11")) && !game.sets.t1.count(BitString("00")),
          "11 winning-determining, 00 losing-determining");

    {
      bool ok = true;
      std::string detail;
      for (std::size_t stage = 0; stage < st.stages.size(); ++stage) {
        SweepStats stats =
            extension_agreement(game, stage, opt.exhaustive_limit, opt.samples, opt.seed);
        if (!stats.pass()) {
          ok = false;
          detail += " stage " + str(stage) + " (" + str(stats.violations.size()) + ")";
        }
      }
      s.add(tag + ".extension-agreement", ok,
            ok ? "rule-level extension characterization matches snapshot search"
               : "violations at" + detail);
    }

    {
      bool ok = true;
      for (std::size_t stage = 0; stage < st.stages.size(); ++stage) {
        ok = ok &&
             coverage_agreement(game, stage, opt.exhaustive_limit, opt.samples, opt.seed).pass();
      }
      s.add(tag + ".pinned-bit-coverage", ok,
            "strings matching the stage pin always extend a snapshot string");
    }

    {
      ContainmentStats stats = containment_trials(game, opt.samples, opt.seed);
      s.add(tag + ".monotone-containment", stats.pass(),
            str(stats.trials) + " trials, " + str(stats.applicable) +
                " applicable, " + str(stats.violations.size()) + " violations");
    }

    {
      bool nested = true;
      DeterminingSets prev;
      for (std::size_t cap = 1; cap <= st.stages.size(); ++cap) {
        DeterminingSets cur = generate_sets(truncated(st, cap), membership_of(a));
        nested = nested &&
                 std::includes(cur.t0.begin(), cur.t0.end(), prev.t0.begin(), prev.t0.end()) &&
                 std::includes(cur.t1.begin(), cur.t1.end(), prev.t1.begin(), prev.t1.end());
        prev = std::move(cur);
      }
      s.add(tag + ".snapshot-nesting", nested, "snapshots grow monotonically with the cap");
    }

    {
      std::vector<DeterminingSets> snapshots;
      for (std::size_t cap = 1; cap <= st.stages.size(); ++cap) {
        snapshots.push_back(generate_sets(truncated(st, cap), membership_of(a)));
      }
      bool stable = true;
      Rng rng(opt.seed + 1);
      for (std::size_t i = 0; i < opt.samples / 20; ++i) {
        SetSpec c = random_coalition(rng, 8);
        Verdict last = Verdict::Undetermined;
        for (const DeterminingSets& cur : snapshots) {
          Verdict v = eval(cur, c, opt.depth);
          if (last != Verdict::Undetermined && v != last) stable = false;
          last = v;
        }
      }
      s.add(tag + ".verdict-stability", stable,
            str(opt.samples / 20) + " coalitions never flip across stage caps");
    }

    {
      bool ok = true;
      std::string detail = "triple ";
      try {
        NonweakTriple triple = nonweak_witnesses(game);
        ok = triple.verified;
        detail += triple.all_pair.str() + "," + triple.ten_side.str() + "," +
                  triple.zeroone_side.str();
      } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
      }
      s.add(tag + ".nonweak-witnesses", ok, detail);
    }

    {
      bool ok = true;
      std::size_t escapes = 0;
      std::size_t escapable = 0;
      for (std::size_t i = 0; i + 1 < st.stages.size(); ++i) {
        if (st.stages[i + 1].length > st.stages[i].length) {
          escapable = st.stages[i].length;
        }
      }
      try {
        for (std::size_t len = 1; len <= escapable; ++len) {
          carrier_escape(game, len);
          ++escapes;
        }
      } catch (const std::exception&) {
        ok = false;
      }
      s.add(tag + ".carrier-escape", ok && escapes == escapable,
            "diagonal stems up to length " + str(escapable) +
                " all have winning and losing extensions");
    }
  }

  {
    // Coalitions whose characteristic index is one of the computed codes
    // must be settled by their stage's depth (when that code's function is
    // total 0/1 on the window, which is all the evaluator can see).
    bool ok = true;
    std::size_t realized = 0, skipped = 0;
    for (const SetSpec& a : {SetSpec::empty_set(), SetSpec::full_set()}) {
      OmegaGame game = make_omega(stages, a);
      for (const StageData& d : st.stages) {
        std::string bits;
        bool total = true;
        for (std::size_t i = 0; i < d.length && total; ++i) {
          RunResult r = run(st.numbering, d.code, i, opt.budget);
          total = r.halted() && *r.output <= 1;
          if (total) bits.push_back(*r.output ? '1' : '0');
        }
        if (!total) {
          ++skipped;
          continue;
        }
        BitString window(bits);
        bool hit = false;
        for (std::size_t len = 1; len <= window.size(); ++len) {
          hit = hit || game.sets.t0.count(window.prefix(len)) ||
                game.sets.t1.count(window.prefix(len));
        }
        ok = ok && hit;
        ++realized;
      }
    }
    s.add("omega.indexed-coalitions-decided", ok,
          str(realized) + " indexed coalitions settled within their stage depth, " +
              str(skipped) + " codes not total on the window");
  }

  {
    AdmissibleStream a = enumerate_admissible(opt.numbering, opt.stages / 2, opt.budget);
    AdmissibleStream b = enumerate_admissible(opt.numbering, opt.stages, opt.budget);
    bool prefix = a.codes.size() <= b.codes.size() &&
                  std::equal(a.codes.begin(), a.codes.end(), b.codes.begin());
    bool sane = true;
    std::set<CodeNumber> seen;
    for (CodeNumber k : b.codes) sane = sane && k >= 1 && seen.insert(k).second;
    s.add("omega.admissible-stream", prefix && sane,
          "prefix-stable, distinct, nonzero (" + str(b.codes.size()) + " codes)");
  }

  {
    // Indices built for plain sets are total, and admissible; whether they
    // also surface in the capped stream is reported but cannot fail the
    // check unless a surfaced entry contradicts the program.
    std::vector<SetSpec> sample = {SetSpec::empty_set(), SetSpec::full_set(),
                                   SetSpec(BitString("1"), 0), SetSpec(BitString("10"), 1)};
    bool ok = true;
    std::size_t found = 0, undetermined = 0;
    for (const SetSpec& spec : sample) {
      CodeNumber k = index_of(opt.numbering, spec);
      for (std::size_t i = 0; i <= 2 * spec.prefix().size() + 4; ++i) {
        RunResult r = run(opt.numbering, k, i, opt.budget);
        ok = ok && r.halted() && static_cast<int>(*r.output) == spec.bit(i);
      }
      AdmissibleStream stream = enumerate_admissible(opt.numbering, opt.stages * 4, opt.budget);
      if (std::find(stream.codes.begin(), stream.codes.end(), k) != stream.codes.end()) {
        ++found;
      } else {
        ++undetermined;
      }
    }
    s.add("omega.characteristic-indices", ok,
          str(sample.size()) + " set indices total and correct; " + str(found) +
              " surfaced in the admissible stream, " + str(undetermined) +
              " undetermined at this budget");
  }
}

// --------------------------------------------------------------- variants --

void variants_suite(Suite& s, const VerifyOptions& opt) {
  StagesPtr stages = compute_stages_shared(opt.numbering, opt.stages, opt.budget);

  {
    auto has = [&](const VariantGame& g, const char* str_, int side) {
      const auto& set = side ? g.sets->t1 : g.sets->t0;
      return set.count(BitString(str_)) != 0;
    };
    VariantGame g4 = build_variant(4, stages);
    VariantGame g9 = build_variant(9, stages);
    VariantGame g11 = build_variant(11, stages);
    VariantGame g12 = build_variant(12, stages);
    VariantGame g13 = build_variant(13, stages);
    VariantGame g15 = build_variant(15, stages);
    bool ok = has(g4, "0", 0) && has(g9, "00", 1) && has(g9, "11", 0) &&
              has(g11, "00", 0) && has(g11, "11", 0) && has(g12, "11", 1) &&
              has(g12, "1000", 1) && has(g12, "1011", 0) && has(g12, "0", 0) &&
              has(g13, "00", 1) && has(g13, "11", 1) && has(g15, "1011", 1) &&
              has(g15, "0100", 1) && has(g15, "1000", 0) && has(g15, "0111", 0);
    s.add("variant.snapshot-facts", ok, "pinned catalogue strings sit in the stated sets");
  }

  {
    bool ok = true;
    std::string detail;
    for (int t : variant_type_ids()) {
      if (t == 3 || t == 5) continue;
      VariantGame g = build_variant(t, stages);
      if (!compatibility_violations(g.sets->all_strings_sorted()).empty()) {
        ok = false;
        detail += " type " + str(t);
      }
    }
    s.add("variant.snapshot-incompatible", ok,
          ok ? "all generator snapshots pairwise incompatible" : "violations at" + detail);
  }

  for (int t : variant_type_ids()) {
    VariantGame g = build_variant(t, stages);
    WitnessBundle bundle = variant_witness(g, opt.depth);
    std::string detail;
    for (const WitnessItem& item : bundle.items) {
      detail += item.property + (item.verified ? "+" : "!") + " ";
    }
    s.add("variant." + str(t) + ".witnesses", bundle.all_verified(), detail);
  }

  {
    DeterminingSets base = generate_sets(*stages, membership_of(SetSpec::empty_set()));
    VariantGame g4 = build_variant(4, stages);
    DeterminingSets expect;
    expect.t0.insert(BitString("0"));
    const BitString one("1");
    for (const BitString& x : base.t0) expect.t0.insert(one + x);
    for (const BitString& x : base.t1) expect.t1.insert(one + x);
    s.add("variant.4-shift-correspondence", *g4.sets == expect,
          "type-4 sets are exactly the base sets shifted behind player 0, plus 0");
  }

  {
    VariantGame g7 = build_variant(7, stages);
    DeterminingSets base = generate_sets(*stages, membership_of(SetSpec::empty_set()));
    auto filter = [](const std::set<BitString>& in, bool want_d) {
      std::set<BitString> out;
      for (const BitString& x : in) {
        if (is_d_string(x) == want_d) out.insert(x);
      }
      return out;
    };
    bool d_same = filter(g7.sets->t0, true) == filter(base.t0, true) &&
                  filter(g7.sets->t1, true) == filter(base.t1, true);
    std::set<BitString> p_variant = filter(g7.sets->t0, false);
    for (const BitString& x : filter(g7.sets->t1, false)) p_variant.insert(x);
    std::set<BitString> p_base = filter(base.t0, false);
    for (const BitString& x : filter(base.t1, false)) p_base.insert(x);
    s.add("variant.7-dstring-preservation", d_same && p_variant == p_base,
          "d-strings keep their sides; the pooled p-strings are unchanged");
  }

  {
    VariantGame g3 = build_variant(3, stages);
    VariantGame g5 = build_variant(5, stages);
    OmegaGame empty = make_omega(stages, SetSpec::empty_set());
    OmegaGame full = make_omega(stages, SetSpec::full_set());
    bool ok = true;
    Rng rng(opt.seed + 2);
    for (std::size_t i = 0; i < opt.samples / 10; ++i) {
      SetSpec c = random_coalition(rng, 8);
      Verdict v3 = eval_variant(g3, c, opt.depth);
      Verdict v5 = eval_variant(g5, c, opt.depth);
      if (v3 == Verdict::Winning) {
        ok = ok && eval_omega(empty, c, opt.depth) == Verdict::Winning &&
             eval_omega(full, c, opt.depth) == Verdict::Winning;
      }
      if (v5 == Verdict::Losing) {
        ok = ok && eval_omega(empty, c, opt.depth) == Verdict::Losing &&
             eval_omega(full, c, opt.depth) == Verdict::Losing;
      }
    }
    s.add("variant.composite-bounds", ok,
          "intersection wins only below both parts; union loses only above both");
  }

  {
    bool ok = true;
    std::string detail;
    for (int t : variant_type_ids()) {
      PositiveFlagStats stats = positive_flag_trials(build_variant(t, stages),
                                                     opt.samples / 10, opt.seed + 4, opt.depth);
      if (!stats.pass()) {
        ok = false;
        detail += " type " + str(t);
      }
    }
    s.add("variant.positive-flags", ok,
          ok ? "sampled monotonicity, properness and strongness hold where claimed"
             : "violations at" + detail);
  }

  {
    std::map<int, std::vector<VariantGame>> ladders;
    for (int t : variant_type_ids()) {
      for (std::size_t cap = 2; cap <= stages->stages.size(); cap += 2) {
        auto sub = std::make_shared<StageSet>(truncated(*stages, cap));
        ladders[t].push_back(build_variant(t, sub));
      }
    }
    bool stable = true;
    Rng rng(opt.seed + 3);
    for (std::size_t i = 0; i < opt.samples / 20; ++i) {
      int t = variant_type_ids()[rng.below(variant_type_ids().size())];
      SetSpec c = random_coalition(rng, 8);
      Verdict last = Verdict::Undetermined;
      for (const VariantGame& g : ladders[t]) {
        Verdict v = eval_variant(g, c, opt.depth);
        if (last != Verdict::Undetermined && v != last) stable = false;
        last = v;
      }
    }
    s.add("variant.verdict-stability", stable,
          str(opt.samples / 20) + " coalitions never flip across stage caps");
  }
}

// ---------------------------------------------------------------- noncomp --

void noncomp_suite(Suite& s, const VerifyOptions& opt) {
  bool build_ok = true, exceptions_ok = true, witnesses_ok = true, precond_ok = true;
  bool agreement_ok = true, totality_ok = true;
  for (int t : exception_type_ids()) {
    ExceptionGame g = build_noncomputable(t);
    const std::size_t depth = std::max<std::size_t>(g.base.max_length(), 1);

    bool tau_in_t0 = false;
    for (std::size_t len = 1; len <= g.base.max_length(); ++len) {
      tau_in_t0 = tau_in_t0 || g.base.t0.count(g.a.characteristic_prefix(len));
    }
    build_ok = build_ok && tau_in_t0 && g.a.is_cofinite() &&
               (g.mode == (t == 5 ? ExceptionMode::WinSideOnly : ExceptionMode::TwoSided));
    if (t == 7) build_ok = build_ok && g.a != SetSpec(BitString("0100"), 1);

    exceptions_ok = exceptions_ok && eval_exception(g, g.a, depth) == Verdict::Winning;
    if (g.mode == ExceptionMode::TwoSided) {
      exceptions_ok =
          exceptions_ok && eval_exception(g, g.a.complemented(), depth) == Verdict::Losing;
      ExtremalWitnesses w = extremal_witnesses(g);
      witnesses_ok = witnesses_ok && w.finite_winning.is_finite() &&
                     w.cofinite_losing.is_cofinite() &&
                     eval_exception(g, w.finite_winning, depth) == Verdict::Winning &&
                     eval_exception(g, w.cofinite_losing, depth) == Verdict::Losing;
    }
    precond_ok = precond_ok && noncomputability_precondition(g);

    for (const SetSpec& c : coalition_family(g.base.max_length() + 1)) {
      Verdict v = eval_exception(g, c, depth);
      totality_ok = totality_ok && v != Verdict::Undetermined;
      if (c != g.a && c != g.a.complemented()) {
        agreement_ok = agreement_ok && v == eval(g.base, c, depth);
      }
    }
  }
  s.add("noncomp.construction", build_ok,
        "A extends a losing-determining string by an all-ones tail, per type");
  s.add("noncomp.exception-verdicts", exceptions_ok,
        "A wins; in two-sided games A^c loses");
  s.add("noncomp.extremal-witnesses", witnesses_ok,
        "finite winning and cofinite losing coalitions verified per two-sided type");
  s.add("noncomp.precondition", precond_ok,
        "every built game satisfies the noncomputability precondition");
  s.add("noncomp.base-agreement", agreement_ok,
        "off the two exceptional coalitions the base game decides everything");
  s.add("noncomp.totality", totality_ok,
        "no Undetermined at depth >= the base's longest string");
  (void)opt;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {"lemmas-finite", "lemmas-omega",
                                                 "variants", "noncomp", "all"};
  return names;
}

std::vector<CheckResult> verify_suite(const std::string& name, const VerifyOptions& opt) {
  Suite s;
  if (name == "lemmas-finite") {
    finite_suite(s, opt);
  } else if (name == "lemmas-omega") {
    omega_suite(s, opt);
  } else if (name == "variants") {
    variants_suite(s, opt);
  } else if (name == "noncomp") {
    noncomp_suite(s, opt);
  } else if (name == "all") {
    finite_suite(s, opt);
    omega_suite(s, opt);
    variants_suite(s, opt);
    noncomp_suite(s, opt);
  } else {
    throw std::invalid_argument("unknown suite: " + name +
                                " (expected lemmas-finite, lemmas-omega, variants, "
                                "noncomp or all)");
  }
  return s.results;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

}  // namespace sgames
