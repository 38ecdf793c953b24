// Command-line surface for the simple-games library: classification of
// finite games, evaluation of game descriptions against coalitions,
// snapshot generation for the staged constructions, witness extraction,
// the 16-type existence table, and the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgames/gamespec.hpp"
#include "sgames/verify.hpp"

using nlohmann::json;
using namespace sgames;

namespace {

struct CommonFlags {
  std::size_t stages = 10;
  std::uint64_t budget = 100000;
  std::size_t depth = 64;
  std::uint64_t seed = 12345;
  std::string numbering = "test";
  bool as_json = false;

  Numbering nb() const {
    return numbering == "canonical" ? Numbering::Canonical : Numbering::Test;
  }
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--stages", f.stages, "stage cap for staged constructions");
  cmd->add_option("--budget", f.budget, "machine step budget");
  cmd->add_option("--depth", f.depth, "evaluation depth in characteristic bits");
  cmd->add_option("--seed", f.seed, "seed for sampled checks");
  cmd->add_option("--numbering", f.numbering, "program numbering: test or canonical")
      ->check(CLI::IsMember({"test", "canonical"}));
  cmd->add_flag("--json", f.as_json, "machine-readable output");
}

json read_game_json(const std::string& file) {
  json j;
  if (file.empty() || file == "-") {
    std::cin >> j;
  } else {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    in >> j;
  }
  return j;
}

int cmd_classify(const std::string& file, bool as_json) {
  FiniteGame g = finite_game_from_json(read_game_json(file));
  TypeVerdict v = analyze(g);
  std::uint32_t veto = veto_players(g);
  if (as_json) {
    json out{{"monotonic", v.monotonic}, {"proper", v.proper},  {"strong", v.strong},
             {"weak", v.weak},           {"type", v.type_id},
             {"dictatorial", is_dictatorial(g)},
             {"veto", BitString::from_mask(veto, g.carrier).str()}};
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  auto sign = [](bool b) { return b ? '+' : '-'; };
  std::cout << "monotonic " << sign(v.monotonic) << "  proper " << sign(v.proper)
            << "  strong " << sign(v.strong) << "  nonweak " << sign(!v.weak) << "\n";
  std::cout << "type " << v.type_id << (is_dictatorial(g) ? "  (dictatorial)" : "") << "\n";
  std::cout << "veto players: " << BitString::from_mask(veto, g.carrier).str() << "\n";
  return 0;
}

int cmd_eval(const std::string& file, const std::string& coalition_arg,
             const CommonFlags& f) {
  GameSpec spec = parse_game(read_game_json(file));
  SetSpec coalition = parse_setspec_arg(coalition_arg);
  EvalContext ctx{f.stages, f.budget, f.nb()};
  Verdict v = eval_spec(spec, coalition, f.depth, ctx);
  if (f.as_json) {
    std::cout << json{{"coalition", to_json(coalition)}, {"verdict", to_string(v)}}.dump(2)
              << "\n";
  } else {
    std::cout << coalition.describe() << ": " << to_string(v) << "\n";
  }
  return 0;
}

int cmd_gen_t(const std::string& a_arg, const CommonFlags& f) {
  SetSpec a = parse_setspec_arg(a_arg);
  StagesPtr stages = compute_stages_shared(f.nb(), f.stages, f.budget);
  OmegaGame game = make_omega(stages, a);
  if (f.as_json) {
    std::cout << snapshot_json(game.sets, stages->stages.size()).dump(2) << "\n";
    return 0;
  }
  std::cout << "A = " << a.describe() << ", stages computed: " << stages->stages.size();
  if (stages->shortfall) std::cout << " (shortfall: " << stages->shortfall_reason << ")";
  std::cout << "\n";
  for (const StageData& st : stages->stages) {
    std::cout << "  stage " << st.index << ": code " << st.code << ", value " << st.phi
              << ", length " << st.length << ", pinned " << st.pinned.size() << "\n";
  }
  std::cout << "T1 (" << game.sets.t1.size() << "):";
  for (const BitString& s : game.sets.t1) std::cout << " " << s.str();
  std::cout << "\nT0 (" << game.sets.t0.size() << "):";
  for (const BitString& s : game.sets.t0) std::cout << " " << s.str();
  std::cout << "\n";
  return 0;
}

json witness_bundle_json(const WitnessBundle& bundle) {
  json items = json::array();
  for (const WitnessItem& item : bundle.items) {
    json checks = json::array();
    for (const CoalitionCheck& c : item.coalitions) {
      checks.push_back(json{{"coalition", to_json(c.coalition)},
                            {"expected", to_string(c.expected)},
                            {"got", to_string(c.got)}});
    }
    items.push_back(json{{"property", item.property},
                         {"detail", item.detail},
                         {"verified", item.verified},
                         {"coalitions", checks}});
  }
  return json{{"type", bundle.type_id}, {"items", items}};
}

void print_bundle(const WitnessBundle& bundle) {
  for (const WitnessItem& item : bundle.items) {
    std::cout << "  [" << (item.verified ? "ok" : "FAIL") << "] " << item.property << ": "
              << item.detail << "\n";
    for (const CoalitionCheck& c : item.coalitions) {
      std::cout << "        " << c.coalition.describe() << " -> " << to_string(c.got)
                << " (expected " << to_string(c.expected) << ")\n";
    }
  }
}

int cmd_variant(int type, const CommonFlags& f) {
  StagesPtr stages = compute_stages_shared(f.nb(), f.stages, f.budget);
  VariantGame g = build_variant(type, stages);
  WitnessBundle bundle = variant_witness(g, f.depth);
  if (f.as_json) {
    json out{{"kind", "variant"}, {"type", type}, {"stages", stages->stages.size()}};
    if (!g.composite()) {
      out["snapshot"] = snapshot_json(*g.sets, stages->stages.size());
    }
    out["witnesses"] = witness_bundle_json(bundle);
    std::cout << out.dump(2) << "\n";
    return bundle.all_verified() ? 0 : 1;
  }
  std::cout << "variant type " << type
            << (g.composite() ? (g.intersect ? " (intersection)" : " (union)") : "")
            << ", stages " << stages->stages.size() << "\n";
  if (!g.composite()) {
    std::cout << "T1 (" << g.sets->t1.size() << "):";
    for (const BitString& s : g.sets->t1) std::cout << " " << s.str();
    std::cout << "\nT0 (" << g.sets->t0.size() << "):";
    for (const BitString& s : g.sets->t0) std::cout << " " << s.str();
    std::cout << "\n";
  }
  std::cout << "witnesses:\n";
  print_bundle(bundle);
  return bundle.all_verified() ? 0 : 1;
}

int cmd_noncomp(int type, const CommonFlags& f) {
  ExceptionGame g = build_noncomputable(type);
  const std::size_t depth = std::max<std::size_t>(f.depth, g.base.max_length());
  json out{{"kind", "exception"},
           {"type", type},
           {"A", to_json(g.a)},
           {"mode", g.mode == ExceptionMode::TwoSided ? "two-sided" : "win-side-only"},
           {"precondition", noncomputability_precondition(g)},
           {"A-verdict", to_string(eval_exception(g, g.a, depth))}};
  if (g.mode == ExceptionMode::TwoSided) {
    out["Ac-verdict"] = to_string(eval_exception(g, g.a.complemented(), depth));
    ExtremalWitnesses w = extremal_witnesses(g);
    out["finite-winning"] = to_json(w.finite_winning);
    out["finite-winning-verdict"] = to_string(eval_exception(g, w.finite_winning, depth));
    out["cofinite-losing"] = to_json(w.cofinite_losing);
    out["cofinite-losing-verdict"] = to_string(eval_exception(g, w.cofinite_losing, depth));
  }
  if (f.as_json) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "exception game of type " << type << " over the finite example\n";
  std::cout << "  A = " << g.a.describe() << " -> " << out["A-verdict"].get<std::string>()
            << "\n";
  if (g.mode == ExceptionMode::TwoSided) {
    std::cout << "  A^c = " << g.a.complemented().describe() << " -> "
              << out["Ac-verdict"].get<std::string>() << "\n";
    std::cout << "  finite winning: " << setspec_from_json(out["finite-winning"]).describe()
              << " -> " << out["finite-winning-verdict"].get<std::string>() << "\n";
    std::cout << "  cofinite losing: " << setspec_from_json(out["cofinite-losing"]).describe()
              << " -> " << out["cofinite-losing-verdict"].get<std::string>() << "\n";
  } else {
    std::cout << "  (win-side-only game: only A is overridden)\n";
  }
  std::cout << "  noncomputability precondition: "
            << (out["precondition"].get<bool>() ? "holds" : "FAILS") << "\n";
  return 0;
}

int cmd_witness(const std::string& which, const std::string& a_arg, std::size_t escape_len,
                const CommonFlags& f) {
  StagesPtr stages = compute_stages_shared(f.nb(), f.stages, f.budget);
  OmegaGame game = make_omega(stages, parse_setspec_arg(a_arg));
  if (which == "nonweak") {
    NonweakTriple t = nonweak_witnesses(game);
    if (f.as_json) {
      std::cout << json{{"strings", {t.all_pair.str(), t.ten_side.str(), t.zeroone_side.str()}},
                        {"verified", t.verified}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "winning strings with empty joint intersection:\n  " << t.all_pair.str()
                << "\n  " << t.ten_side.str() << "\n  " << t.zeroone_side.str() << "\n"
                << (t.verified ? "verified" : "VERIFICATION FAILED") << "\n";
    }
    return t.verified ? 0 : 1;
  }
  // carrier: stems of every length (or the one requested) escape into both sets
  std::size_t max_len = 0;
  for (std::size_t i = 0; i + 1 < stages->stages.size(); ++i) {
    if (stages->stages[i + 1].length > stages->stages[i].length) {
      max_len = stages->stages[i].length;
    }
  }
  json rows = json::array();
  for (std::size_t len = escape_len ? escape_len : 1;
       len <= (escape_len ? escape_len : max_len); ++len) {
    CarrierEscape esc = carrier_escape(game, len);
    rows.push_back(json{{"length", len},
                        {"stem", esc.stem.str()},
                        {"winning", esc.win_ext.str()},
                        {"losing", esc.lose_ext.str()}});
  }
  if (f.as_json) {
    std::cout << rows.dump(2) << "\n";
  } else {
    for (const auto& r : rows) {
      std::cout << "len " << r["length"] << ": stem " << r["stem"].get<std::string>()
                << " -> win " << r["winning"].get<std::string>() << ", lose "
                << r["losing"].get<std::string>() << "\n";
    }
  }
  return 0;
}

int cmd_table(int carrier, const CommonFlags& f) {
  std::set<int> realizable = exhaustive_search(carrier);
  const std::set<int> finite_ids(finite_example_ids().begin(), finite_example_ids().end());
  const std::set<int> variant_ids(variant_type_ids().begin(), variant_type_ids().end());
  const std::set<int> exception_ids(exception_type_ids().begin(),
                                    exception_type_ids().end());

  StagesPtr stages = compute_stages_shared(f.nb(), std::min<std::size_t>(f.stages, 6),
                                           f.budget);

  json rows = json::array();
  for (int t = 1; t <= 16; ++t) {
    std::string fin_comp, inf_non, inf_comp;
    bool ok = true;
    if (finite_ids.count(t)) {
      TypeVerdict v = analyze(game_from_sets(finite_example(t),
                                             static_cast<int>(finite_example(t).max_length())));
      ok = ok && v.type_id == t && realizable.count(t);
      fin_comp = "yes (constructed)";
    } else {
      ok = ok && !realizable.count(t);
      fin_comp = "no (exhaustive to carrier " + std::to_string(carrier) + ")";
    }
    if (exception_ids.count(t)) {
      ExceptionGame g = build_noncomputable(t);
      ok = ok && noncomputability_precondition(g);
      inf_non = "yes (theorem; precondition checked)";
    } else {
      inf_non = t == 2 ? "no (type-2 games are dictatorial)" : "no (type empty)";
    }
    if (t == 1) {
      OmegaGame g = make_omega(stages, SetSpec::empty_set());
      ok = ok && nonweak_witnesses(g).verified;
      inf_comp = "yes, witnessed (bounded depth)";
    } else if (variant_ids.count(t)) {
      ok = ok && variant_witness(build_variant(t, stages), f.depth).all_verified();
      inf_comp = "yes, witnessed (bounded depth)";
    } else {
      inf_comp = t == 2 ? "no (type-2 games are dictatorial)" : "no (type empty)";
    }
    rows.push_back(json{{"type", t},
                        {"finite-noncomputable", "no (finite games are computable)"},
                        {"finite-computable", fin_comp},
                        {"infinite-noncomputable", inf_non},
                        {"infinite-computable", inf_comp},
                        {"verified", ok}});
  }

  if (f.as_json) {
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << "type | finite noncomp | finite computable                | "
                 "infinite noncomputable              | infinite computable\n";
    for (const auto& r : rows) {
      std::ostringstream line;
      line << (r["verified"].get<bool>() ? "  " : "! ");
      line.width(3);
      line << r["type"].get<int>() << " | no             | ";
      std::string fc = r["finite-computable"].get<std::string>();
      fc.resize(32, ' ');
      std::string in = r["infinite-noncomputable"].get<std::string>();
      in.resize(35, ' ');
      line << fc << " | " << in << " | " << r["infinite-computable"].get<std::string>();
      std::cout << line.str() << "\n";
    }
  }
  bool all_ok = std::all_of(rows.begin(), rows.end(),
                            [](const json& r) { return r["verified"].get<bool>(); });
  return all_ok ? 0 : 1;
}

int cmd_verify(const std::string& suite, const CommonFlags& f) {
  VerifyOptions opt;
  opt.stages = f.stages;
  opt.budget = f.budget;
  opt.seed = f.seed;
  opt.depth = f.depth;
  opt.numbering = f.nb();
  std::vector<CheckResult> results = verify_suite(suite, opt);
  if (f.as_json) {
    json out = json::array();
    for (const CheckResult& r : results) {
      out.push_back(json{{"check", r.id}, {"pass", r.pass}, {"detail", r.detail}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const CheckResult& r : results) {
      std::cout << "[" << (r.pass ? "pass" : "FAIL") << "] " << r.id << " — " << r.detail
                << "\n";
    }
    std::size_t passed = 0;
    for (const CheckResult& r : results) passed += r.pass;
    std::cout << passed << "/" << results.size() << " checks passed\n";
  }
  return all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simple games: axioms, computability, staged constructions"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string game_file;
  std::string coalition_arg = "empty";
  std::string a_arg = "empty";
  int type = 1;
  int carrier = 4;
  std::size_t escape_len = 0;
  std::string witness_kind = "nonweak";
  std::string suite = "all";

  CLI::App* classify = app.add_subcommand("classify", "four axioms and type of a finite game");
  classify->add_option("--game", game_file, "JSON file ('-' or omit for stdin)");
  add_common(classify, flags);

  CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a coalition against a game");
  eval_cmd->add_option("--game", game_file, "JSON file ('-' or omit for stdin)");
  eval_cmd->add_option("--coalition", coalition_arg, "coalition as <prefix>:<tail>, empty, full")
      ->required();
  add_common(eval_cmd, flags);

  CLI::App* gen = app.add_subcommand("gen-T", "determining-string snapshot of the staged game");
  gen->add_option("--A", a_arg, "index set as <prefix>:<tail>, empty, full")->required();
  add_common(gen, flags);

  CLI::App* variant = app.add_subcommand("variant", "snapshot and witnesses of a typed variant");
  variant->add_option("--type", type, "variant type id")->required();
  add_common(variant, flags);

  CLI::App* noncomp = app.add_subcommand("noncomp", "exception game of a type");
  noncomp->add_option("--type", type, "type id")->required();
  add_common(noncomp, flags);

  CLI::App* witness = app.add_subcommand("witness", "nonweakness / carrier-escape witnesses");
  witness->add_option("kind", witness_kind, "nonweak or carrier")
      ->check(CLI::IsMember({"nonweak", "carrier"}));
  witness->add_option("--A", a_arg, "index set as <prefix>:<tail>, empty, full");
  witness->add_option("--l", escape_len, "single stem length (carrier mode)");
  add_common(witness, flags);

  CLI::App* table = app.add_subcommand("table", "existence of games per type and class");
  table->add_option("--carrier", carrier, "carrier for the exhaustive finite sweep (<= 4)");
  add_common(table, flags);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "lemmas-finite | lemmas-omega | variants | noncomp | all");
  add_common(verify, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (classify->parsed()) return cmd_classify(game_file, flags.as_json);
    if (eval_cmd->parsed()) return cmd_eval(game_file, coalition_arg, flags);
    if (gen->parsed()) return cmd_gen_t(a_arg, flags);
    if (variant->parsed()) return cmd_variant(type, flags);
    if (noncomp->parsed()) return cmd_noncomp(type, flags);
    if (witness->parsed()) return cmd_witness(witness_kind, a_arg, escape_len, flags);
    if (table->parsed()) return cmd_table(carrier, flags);
    if (verify->parsed()) return cmd_verify(suite, flags);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
