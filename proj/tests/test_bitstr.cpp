#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgames/bitstr.hpp"
#include "sgames/rng.hpp"

using namespace sgames;

TEST_CASE("complement flips every bit") {
  CHECK(BitString("0110100100").complement() == BitString("1001011011"));
  CHECK(BitString("").complement() == BitString(""));
  CHECK(BitString("0").complement() == BitString("1"));
}

TEST_CASE("complement is an involution preserving length") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    std::string bits;
    for (std::uint64_t j = rng.below(16); j > 0; --j) bits.push_back(rng.bit() ? '1' : '0');
    BitString x(bits);
    CHECK(x.complement().size() == x.size());
    CHECK(x.complement().complement() == x);
  }
}

TEST_CASE("incompatibility is a disagreement below both lengths") {
  CHECK(incompatible(BitString("00"), BitString("010")));
  CHECK(!incompatible(BitString("01"), BitString("011")));
  CHECK(!incompatible(BitString("10"), BitString("10")));
  CHECK(!incompatible(BitString(""), BitString("1")));
}

TEST_CASE("p-strings pair 10 or 01") {
  CHECK(is_p_string(BitString("")));
  CHECK(is_p_string(BitString("01")));
  CHECK(is_p_string(BitString("0101")));
  CHECK(is_p_string(BitString("0110")));
  CHECK(is_p_string(BitString("1001011010")));
  CHECK(!is_p_string(BitString("0011")));
  CHECK(!is_p_string(BitString("0")));
  CHECK(!is_p_string(BitString("011")));
}

TEST_CASE("d-strings are a p-string plus a constant pair") {
  CHECK(is_d_string(BitString("11")));
  CHECK(is_d_string(BitString("010100")));
  CHECK(!is_d_string(BitString("0110")));
  CHECK(!is_d_string(BitString("")));
  CHECK(!is_d_string(BitString("0101")));
}

TEST_CASE("even-length strings split into p-strings and d-string extensions") {
  for (std::size_t len = 0; len <= 12; len += 2) {
    for (const BitString& x : all_strings(len)) {
      CHECK(is_p_string(x) != extends_d_string(x));
    }
  }
}

TEST_CASE("distinct d-strings are pairwise incompatible") {
  std::vector<BitString> ds;
  for (std::size_t len = 2; len <= 12; len += 2) {
    for (const BitString& x : all_strings(len)) {
      if (is_d_string(x)) ds.push_back(x);
    }
  }
  CHECK(ds.size() > 50);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      CHECK(incompatible(ds[i], ds[j]));
    }
  }
}

TEST_CASE("complement preserves p-strings and d-strings") {
  for (std::size_t len = 0; len <= 10; len += 2) {
    for (const BitString& x : all_strings(len)) {
      CHECK(is_p_string(x) == is_p_string(x.complement()));
      CHECK(is_d_string(x) == is_d_string(x.complement()));
    }
  }
}

TEST_CASE("proper containment is bitwise dominance with a strict step") {
  CHECK(properly_contains(BitString("11"), BitString("10")));
  CHECK(properly_contains(BitString("111"), BitString("10")));
  CHECK(!properly_contains(BitString("10"), BitString("10")));
  CHECK(!properly_contains(BitString("01"), BitString("10")));
  CHECK(!properly_contains(BitString("1"), BitString("10")));
}

TEST_CASE("prefix drop and concat agree") {
  BitString x("10110");
  CHECK(x.prefix(3) == BitString("101"));
  CHECK(x.drop_back(2) == BitString("101"));
  CHECK(x.drop_back(1) + BitString("0") == BitString("10110"));
  CHECK(BitString("10").is_prefix_of(x));
  CHECK(x.extends(BitString("1011")));
  CHECK(!x.extends(BitString("11")));
}

TEST_CASE("p-string enumeration extends a forced prefix") {
  auto all4 = p_strings_extending(BitString("10"), 4);
  REQUIRE(all4.size() == 2);
  CHECK(all4[0] == BitString("1001"));
  CHECK(all4[1] == BitString("1010"));
  CHECK(p_strings_extending(BitString("11"), 4).empty());
  auto odd_prefix = p_strings_extending(BitString("1"), 2);
  REQUIRE(odd_prefix.size() == 1);
  CHECK(odd_prefix[0] == BitString("10"));
}

TEST_CASE("bad characters are rejected") {
  CHECK_THROWS_AS(BitString("01a"), std::invalid_argument);
}
