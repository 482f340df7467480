#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "cdrkit/errors.hpp"
#include "cdrkit/perm.hpp"
#include "oracles.hpp"

using namespace cdrkit;

namespace {

SignedPermutation P(std::vector<int> e) { return SignedPermutation(std::move(e)); }

std::string token_of(std::string_view text) {
  try {
    parse_permutation(text);
  } catch (const ParseError& e) {
    return e.token();
  }
  return "<accepted>";
}

}  // namespace

TEST_CASE("parse accepts the usual spellings") {
  CHECK(parse_permutation("[1, -5, -2, 4, -3, 6]").vector() == std::vector<int>{1, -5, -2, 4, -3, 6});
  CHECK(parse_permutation("1").vector() == std::vector<int>{1});
  CHECK(parse_permutation("1 -3 2").vector() == std::vector<int>{1, -3, 2});
  CHECK(parse_permutation(" [ +2 ,-1 ] ").vector() == std::vector<int>{2, -1});
  CHECK(parse_permutation("[3,\t1,2]").vector() == std::vector<int>{3, 1, 2});
}

TEST_CASE("parse errors name the offending token") {
  CHECK_THROWS_AS(parse_permutation("[1, 1]"), ParseError);
  CHECK(token_of("[1, 1]") == "1");
  CHECK(token_of("[1, 0]") == "0");
  CHECK(token_of("[1, 3]") == "3");
  CHECK(token_of("[1, x]") == "x");
  CHECK_THROWS_AS(parse_permutation(""), ParseError);
  CHECK_THROWS_AS(parse_permutation("[]"), ParseError);
  CHECK_THROWS_AS(parse_permutation("[1, 2"), ParseError);
  CHECK_THROWS_AS(parse_permutation("1, 2]"), ParseError);
  CHECK_THROWS_AS(parse_permutation("[1,,2]"), ParseError);
  CHECK_THROWS_AS(parse_permutation("[1,2,]"), ParseError);
  CHECK_THROWS_AS(parse_permutation("[1,\n2]"), ParseError);
  CHECK_THROWS_AS(P({-2, 2}), ParseError);
}

TEST_CASE("parse lines skips comments and blanks") {
  const auto perms = parse_permutation_lines("# header\n\n[1,2]\n  -1 \n# tail\n");
  REQUIRE(perms.size() == 2);
  CHECK(perms[0] == P({1, 2}));
  CHECK(perms[1] == P({-1}));
}

TEST_CASE("format and parse round-trip") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto p = random_signed_permutation(1 + trial % 12, rng);
    CHECK(parse_permutation(format_permutation(p)) == p);
  }
  CHECK(format_permutation(P({4, -1, 2, 3})) == "[4, -1, 2, 3]");
}

TEST_CASE("pointer occurrences") {
  SUBCASE("both ends of (2,3) in [-2,1,-4,3] sit on left sides") {
    const auto occ = occurrences_of(P({-2, 1, -4, 3}), Pointer{2});
    CHECK(occ[0].entry_index == 1);
    CHECK(occ[0].side == Side::Left);
    CHECK(occ[0].end == PointerEnd::Head);
    CHECK(occ[1].entry_index == 4);
    CHECK(occ[1].side == Side::Left);
    CHECK(occ[1].end == PointerEnd::Tail);
  }
  SUBCASE("[1] has no internal pointer") { CHECK(pointer_occurrences(P({1})).empty()); }
  SUBCASE("arcs of T") {
    const auto t = fixture("T");
    auto span = [&](int i) {
      const auto o = occurrences_of(t, Pointer{i});
      return std::pair{o[0].key(), o[1].key()};
    };
    // 1R=3, 3R=7, 3L=6, 5R=11, 4L=8, 5L=10, 2R=5, 4R=9, 2L=4, 6L=12
    CHECK(span(1) == std::pair<std::size_t, std::size_t>{3, 7});
    CHECK(span(2) == std::pair<std::size_t, std::size_t>{6, 11});
    CHECK(span(3) == std::pair<std::size_t, std::size_t>{8, 10});
    CHECK(span(4) == std::pair<std::size_t, std::size_t>{5, 9});
    CHECK(span(5) == std::pair<std::size_t, std::size_t>{4, 12});
  }
  CHECK_THROWS_AS(occurrences_of(P({1, 2}), Pointer{2}), std::out_of_range);
  CHECK_THROWS_AS(occurrences_of(P({1, 2}), Pointer{0}), std::out_of_range);
}

TEST_CASE("occurrence keys are distinct and ordered, two per pointer") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = random_signed_permutation(1 + trial % 15, rng);
    const auto occ = pointer_occurrences(p);
    REQUIRE(occ.size() == 2 * (p.size() - 1));
    std::map<int, int> per_pointer;
    std::set<std::size_t> keys;
    for (std::size_t i = 0; i < occ.size(); ++i) {
      ++per_pointer[occ[i].pointer.low];
      keys.insert(occ[i].key());
      if (i > 0) CHECK(occ[i - 1].key() < occ[i].key());
      CHECK(occ[i].entry_sign == (p[occ[i].entry_index - 1] > 0 ? 1 : -1));
    }
    CHECK(keys.size() == occ.size());
    for (const auto& [low, count] : per_pointer) CHECK(count == 2);
    // word oracle lists the same pointers in the same order
    std::vector<int> from_occ;
    for (const auto& o : occ) from_occ.push_back(o.pointer.low);
    CHECK(from_occ == oracle::pointer_word(p));
  }
}

TEST_CASE("identity and reverse identity") {
  CHECK(is_identity(P({1, 2, 3})));
  CHECK(is_reverse_identity(P({-8, -7, -6, -5, -4, -3, -2, -1})));
  CHECK_FALSE(is_identity(P({-2, 1})));
  CHECK_FALSE(is_reverse_identity(P({-2, 1})));
  CHECK(SignedPermutation::identity(4) == P({1, 2, 3, 4}));
  CHECK(SignedPermutation::reverse_identity(3) == P({-3, -2, -1}));
}

TEST_CASE("adjacencies and collapse") {
  CHECK(collapse_adjacencies(P({1, 2, 3})) == P({1}));
  CHECK(collapse_adjacencies(P({3, 4, 1, 2})) == P({2, 1}));
  CHECK(find_adjacencies(P({-2, 1, -4, 3})).empty());
  CHECK(collapse_adjacencies(P({-2, 1, -4, 3})) == P({-2, 1, -4, 3}));
  CHECK(find_adjacencies(P({-3, -2, 5, 1, 4})) == std::vector<std::size_t>{1});
  CHECK(collapse_adjacencies(P({-3, -2, 5, 1, 4})) == P({-2, 4, 1, 3}));
  CHECK(collapse_adjacencies(P({-8, -7, -6, -5, -4, -3, -2, -1})) == P({-1}));

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto p = random_signed_permutation(1 + trial % 10, rng);
    const auto c = collapse_adjacencies(p);
    CHECK(collapse_adjacencies(c) == c);
    CHECK(find_adjacencies(c).empty());
    CHECK(c.size() == p.size() - find_adjacencies(p).size());
    CHECK(is_identity(c) == is_identity(p));
  }
}

TEST_CASE("sigma and tau") {
  CHECK(sigma(1) == P({-2, 1, 3}));
  CHECK(tau(1) == P({-2, 1}));
  CHECK(sigma(2) == P({-4, -2, 1, 3, 5}));
  CHECK(tau(3) == P({-6, -4, -2, 1, 3, 5}));
  CHECK(sigma(50).size() == 101);
  CHECK_THROWS_AS(sigma(0), std::invalid_argument);
  CHECK_THROWS_AS(tau(0), std::invalid_argument);
}

TEST_CASE("fixtures") {
  CHECK(fixture("o_nova_actin1") == P({3, 5, 4, 6, 8, -2, 1, 7}));
  CHECK(fixture("u_pisces_1") == P({1, 3, -7, -5, 14, 2, 4, 6, 9, 12, -11, -8, 13, 15, -10}));
  CHECK(fixture("u_pisces_2") == P({2, 4, 6, 9, 12, -11, -8, 13, 15, -10, 1, 3, -7, -5, 14}));
  CHECK(fixture("alpha_tbp") == P({1, 3, 5, 7, 9, 11, 2, 4, 6, 8, 10, 12}));
  CHECK(fixture("sigma_16") == sigma(16));
  CHECK(fixture("tau_21") == tau(21));
  CHECK_THROWS_AS(fixture("nope"), std::out_of_range);
}

TEST_CASE("enumeration is a bijection onto signed permutations") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto count = signed_permutation_count(n);
    std::set<SignedPermutation> seen;
    for (std::uint64_t i = 0; i < count; ++i) seen.insert(signed_permutation_at(n, i));
    CHECK(seen.size() == count);
  }
  CHECK(signed_permutation_count(5) == 3840);
  CHECK(signed_permutation_at(3, 0) == P({1, 2, 3}));
}

TEST_CASE("random draws are reproducible") {
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 50; ++i) CHECK(random_signed_permutation(9, a) == random_signed_permutation(9, b));
}
