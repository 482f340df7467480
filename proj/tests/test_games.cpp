#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cdrkit/analysis.hpp"
#include "cdrkit/errors.hpp"
#include "cdrkit/games.hpp"
#include "oracles.hpp"

using namespace cdrkit;

namespace {

GameState start(const OrientedGraph& g, PlayRule rule) { return GameState{g, Player::One, rule}; }

// From the rank: the length of every play, hence who moves last.
Player rank_winner(const OrientedGraph& g, PlayRule rule) {
  const bool one_moves_last = oracle::looped_rank(g) % 2 == 1;
  const bool one_wins = rule == PlayRule::Normal ? one_moves_last : !one_moves_last;
  return one_wins ? Player::One : Player::Two;
}

}  // namespace

TEST_CASE("worked examples") {
  const auto pi = build_overlap_graph(fixture("maxseq"));
  const auto normal = winner_by_parity(start(pi, PlayRule::Normal));
  CHECK(normal.winner == Player::One);
  CHECK(normal.play_length % 2 == 1);
  CHECK(winner_by_parity(start(pi, PlayRule::Misere)).winner == Player::Two);
  CHECK(winner_by_minimax(start(pi, PlayRule::Normal)).winner == Player::One);

  const auto id = build_overlap_graph(SignedPermutation::identity(3));
  CHECK(winner_by_parity(start(id, PlayRule::Misere)).winner == Player::One);
  CHECK(winner_by_parity(start(id, PlayRule::Normal)).winner == Player::Two);
  CHECK(winner_by_minimax(start(id, PlayRule::Misere)).winner == Player::One);
  CHECK(winner_by_minimax(start(id, PlayRule::Normal)).winner == Player::Two);

  const auto empty = build_overlap_graph(SignedPermutation::identity(1));
  CHECK(winner_by_minimax(start(empty, PlayRule::Misere)).winner == Player::One);
}

TEST_CASE("moves") {
  const auto pi = build_overlap_graph(fixture("maxseq"));
  const auto s = start(pi, PlayRule::Normal);
  CHECK(legal_moves(s) == std::vector<int>{1, 2, 5});
  const auto next = play(s, 5);
  CHECK(next.to_move == Player::Two);
  CHECK(legal_moves(next).empty());
  CHECK_THROWS_AS(play(s, 3), NotApplicable);
  CHECK_THROWS_AS(play(s, 9), NotApplicable);
  CHECK(opponent(Player::One) == Player::Two);
  CHECK(std::string(to_string(PlayRule::Misere)) == "misere");
}

TEST_CASE("play-out trace") {
  const auto pi = build_overlap_graph(fixture("maxseq"));
  const auto plies = play_out(start(pi, PlayRule::Normal));
  REQUIRE(plies.size() == maximal_play_length(pi));
  CHECK(plies.front().player == Player::One);
  CHECK(plies.back().remaining_oriented == 0);
  const auto text = format_game_trace(plies);
  CHECK(text.rfind("1 ONE (1,2) ", 0) == 0);
  CHECK(format_game_trace(plies, LabelStyle::Plain).rfind("1 ONE 1 ", 0) == 0);
}

TEST_CASE("parity, minimax, brute force and rank agree on permutation graphs") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t i = 0; i < signed_permutation_count(n); ++i) {
      const auto g = build_overlap_graph(signed_permutation_at(n, i));
      for (auto rule : {PlayRule::Normal, PlayRule::Misere}) {
        const auto s = start(g, rule);
        const auto mm = winner_by_minimax(s);
        REQUIRE(mm.winner.has_value());
        REQUIRE(winner_by_parity(s).winner == *mm.winner);
        REQUIRE(rank_winner(g, rule) == *mm.winner);
        const bool one_wins = oracle::mover_wins_brute(g, rule == PlayRule::Misere);
        REQUIRE((one_wins ? Player::One : Player::Two) == *mm.winner);
      }
    }
  }
}

TEST_CASE("parity and minimax agree on random graphs") {
  std::mt19937_64 rng(500);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    const auto g = random_oriented_graph(1 + rng() % 8, u(rng), u(rng), rng);
    for (auto rule : {PlayRule::Normal, PlayRule::Misere}) {
      const auto s = start(g, rule);
      const auto mm = winner_by_minimax(s);
      REQUIRE(mm.winner.has_value());
      REQUIRE(winner_by_parity(s).winner == *mm.winner);
      REQUIRE(rank_winner(g, rule) == *mm.winner);
    }
    // second player to move flips the answer
    GameState two{g, Player::Two, PlayRule::Normal};
    REQUIRE(winner_by_parity(two).winner == opponent(winner_by_parity(start(g, PlayRule::Normal)).winner));
  }
}

TEST_CASE("minimax budget") {
  const auto g = build_overlap_graph(fixture("u_pisces_1"));
  const auto mm = winner_by_minimax(start(g, PlayRule::Normal), 5);
  CHECK_FALSE(mm.winner.has_value());
}
