#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgames/axioms.hpp"

using namespace sgames;

namespace {

FiniteGame realized(int type_id) {
  DeterminingSets sets = finite_example(type_id);
  return game_from_sets(sets, static_cast<int>(sets.max_length()));
}

}  // namespace

TEST_CASE("type ids follow the sign-vector row order") {
  CHECK(type_id_from_flags(true, true, true, false) == 1);    // ++++
  CHECK(type_id_from_flags(true, true, true, true) == 2);     // +++-
  CHECK(type_id_from_flags(true, true, false, false) == 3);   // ++-+
  CHECK(type_id_from_flags(false, true, true, false) == 9);   // -+++
  CHECK(type_id_from_flags(false, false, false, true) == 16); // ----
}

TEST_CASE("the dictator game on one player") {
  FiniteGame g = realized(2);
  TypeVerdict v = analyze(g);
  CHECK(v.monotonic);
  CHECK(v.proper);
  CHECK(v.strong);
  CHECK(v.weak);
  CHECK(v.type_id == 2);
  CHECK(is_dictatorial(g));
  CHECK(veto_players(g) == 1u);  // player 0
}

TEST_CASE("the majority-style type-1 game on three players") {
  FiniteGame g = realized(1);
  // the four winning masks are the extensions of 11, 011 and 101
  CHECK(g.carrier == 3);
  int count = 0;
  for (std::uint32_t m = 0; m < g.mask_count(); ++m) count += g.wins(m);
  CHECK(count == 4);
  CHECK(g.wins(0b011));   // string 110 = {0,1}
  CHECK(g.wins(0b111));
  CHECK(g.wins(0b110));   // string 011 = {1,2}
  CHECK(g.wins(0b101));   // string 101 = {0,2}
  TypeVerdict v = analyze(g);
  CHECK(v.type_id == 1);
  CHECK(veto_players(g) == 0u);
  CHECK(!is_dictatorial(g));
}

TEST_CASE("the inverted dictator is type 9") {
  FiniteGame g = realized(9);
  TypeVerdict v = analyze(g);
  CHECK(!v.monotonic);
  CHECK(v.proper);
  CHECK(v.strong);
  CHECK(!v.weak);
  CHECK(v.type_id == 9);
}

TEST_CASE("every catalogue example realizes its own type") {
  for (int id : finite_example_ids()) {
    CHECK(analyze(realized(id)).type_id == id);
  }
}

TEST_CASE("empty game conventions") {
  FiniteGame empty{2, 0};
  TypeVerdict v = analyze(empty);
  CHECK(v.weak);  // no winning coalitions
  CHECK(veto_players(empty) == 0b11u);
  CHECK(!is_dictatorial(empty));
}

TEST_CASE("unanimity game on two players") {
  FiniteGame g = realized(4);  // T1 = {11}
  CHECK(g.carrier == 2);
  CHECK(g.winning == (1u << 0b11));
  TypeVerdict v = analyze(g);
  CHECK(v.type_id == 4);
  CHECK(veto_players(g) == 0b11u);
}

TEST_CASE("game_from_sets validates its inputs") {
  DeterminingSets overlap;
  overlap.t0.insert(BitString("0"));
  overlap.t1.insert(BitString("0"));
  CHECK_THROWS_AS(game_from_sets(overlap, 1), std::invalid_argument);
  CHECK_THROWS_AS(game_from_sets(finite_example(1), 2), std::invalid_argument);
  CHECK_THROWS_AS(analyze(FiniteGame{7, 0}), std::invalid_argument);
}

TEST_CASE("one-player games realize exactly four types") {
  std::set<int> expected = {2, 4, 5, 9};
  CHECK(exhaustive_search(1) == expected);
  CHECK(exhaustive_search_serial(1) == expected);
}

TEST_CASE("three- and four-player sweeps dodge the empty types") {
  std::set<int> found3 = exhaustive_search(3);
  for (int t : {6, 8, 10, 14, 16}) CHECK(!found3.count(t));
  std::set<int> found4 = exhaustive_search(4);
  std::set<int> expected = {1, 2, 3, 4, 5, 7, 9, 11, 12, 13, 15};
  CHECK(found4 == expected);
}

TEST_CASE("parallel sweep matches the serial reference") {
  for (int k = 0; k <= 4; ++k) {
    CHECK(exhaustive_search(k) == exhaustive_search_serial(k));
  }
  CHECK_THROWS_AS(exhaustive_search(5), std::invalid_argument);
}

TEST_CASE("weak games are proper; dictatorial means strong and weak") {
  for (int k = 1; k <= 3; ++k) {
    const std::uint32_t games = 1u << (1u << k);
    for (std::uint32_t w = 0; w < games; ++w) {
      FiniteGame g{k, w};
      TypeVerdict v = analyze(g);
      if (v.weak) CHECK(v.proper);
      CHECK(is_dictatorial(g) == (v.strong && v.weak));
    }
  }
}
