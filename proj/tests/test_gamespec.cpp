#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgames/gamespec.hpp"

using namespace sgames;
using nlohmann::json;

TEST_CASE("setspec json round-trip") {
  SetSpec s(BitString("10"), 1);
  json j = to_json(s);
  CHECK(j["prefix"] == "10");
  CHECK(j["tail"] == 1);
  CHECK(setspec_from_json(j) == s);
}

TEST_CASE("setspec cli shorthand") {
  CHECK(parse_setspec_arg("empty") == SetSpec::empty_set());
  CHECK(parse_setspec_arg("full") == SetSpec::full_set());
  CHECK(parse_setspec_arg(":0") == SetSpec::empty_set());
  CHECK(parse_setspec_arg("10:1") == SetSpec(BitString("10"), 1));
  CHECK_THROWS_AS(parse_setspec_arg("10"), std::invalid_argument);
  CHECK_THROWS_AS(parse_setspec_arg("10:2"), std::invalid_argument);
}

TEST_CASE("determining sets round-trip in the documented shape") {
  DeterminingSets sets = finite_example(1);
  json j = to_json(sets);
  CHECK(j["kind"] == "finite");
  CHECK(j["T0"] == json({"00", "010", "100"}));
  CHECK(j["T1"] == json({"011", "101", "11"}));  // set order: lexicographic
  CHECK(sets_from_json(j) == sets);
}

TEST_CASE("finite game json uses per-player mask strings") {
  FiniteGame g;
  g.carrier = 3;
  g.winning = (1u << 0b011) | (1u << 0b111);
  json j = to_json(g);
  FiniteGame back = finite_game_from_json(j);
  CHECK(back.carrier == 3);
  CHECK(back.winning == g.winning);
  CHECK_THROWS_AS(finite_game_from_json(json{{"carrier", 3}, {"winning", {"11"}}}),
                  std::invalid_argument);
}

TEST_CASE("program json round-trip") {
  Program p = characteristic_program(SetSpec(BitString("10"), 1));
  json j = to_json(p);
  CHECK(j.is_array());
  CHECK(j[0] == "decjz r2 4");
  CHECK(program_from_json(j) == p);
}

TEST_CASE("game specs parse, serialize and evaluate") {
  EvalContext ctx;
  ctx.stages = 6;

  json finite = to_json(finite_example(1));
  GameSpec f = parse_game(finite);
  CHECK(eval_spec(f, SetSpec::full_set(), 8, ctx) == Verdict::Winning);
  CHECK(game_to_json(f) == finite);

  json omega = {{"kind", "omega"}, {"A", {{"prefix", ""}, {"tail", 0}}}};
  GameSpec o = parse_game(omega);
  CHECK(eval_spec(o, SetSpec::full_set(), 8, ctx) == Verdict::Winning);
  CHECK(eval_spec(o, SetSpec::empty_set(), 8, ctx) == Verdict::Losing);

  json variant = {{"kind", "variant"}, {"type", 12}, {"stages", 6}};
  GameSpec v = parse_game(variant);
  CHECK(eval_spec(v, SetSpec(BitString("1000"), 0), 8, ctx) == Verdict::Winning);
  CHECK(game_to_json(v) == variant);

  json exception = {{"kind", "exception"}, {"type", 1}};
  GameSpec e = parse_game(exception);
  CHECK(eval_spec(e, SetSpec(BitString("00"), 1), 8, ctx) == Verdict::Winning);

  json composite = {{"kind", "intersection"}, {"left", omega},
                    {"right", {{"kind", "omega"}, {"A", {{"prefix", ""}, {"tail", 1}}}}}};
  GameSpec c = parse_game(composite);
  CHECK(eval_spec(c, SetSpec::full_set(), 8, ctx) == Verdict::Winning);
  CHECK(eval_spec(c, SetSpec::empty_set(), 8, ctx) == Verdict::Losing);
  CHECK(game_to_json(c) == composite);

  CHECK_THROWS_AS(parse_game(json{{"kind", "nope"}}), std::invalid_argument);
}

TEST_CASE("exception node accepts an A override") {
  json j = {{"kind", "exception"}, {"type", 1}, {"A", {{"prefix", "010"}, {"tail", 1}}}};
  GameSpec g = parse_game(j);
  EvalContext ctx;
  CHECK(eval_spec(g, SetSpec(BitString("010"), 1), 8, ctx) == Verdict::Winning);
  CHECK(game_to_json(g) == j);
}
