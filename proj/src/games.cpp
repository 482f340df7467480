#include "cdrkit/games.hpp"

#include <unordered_map>

#include "cdrkit/analysis.hpp"

namespace cdrkit {

const char* to_string(Player p) { return p == Player::One ? "ONE" : "TWO"; }
const char* to_string(PlayRule r) { return r == PlayRule::Normal ? "normal" : "misere"; }
Player opponent(Player p) { return p == Player::One ? Player::Two : Player::One; }

std::vector<int> legal_moves(const GameState& s) { return s.graph.oriented_labels(); }

GameState play(const GameState& s, int vertex) {
  const auto idx = s.graph.index_of(vertex);
  if (!idx || !s.graph.oriented(*idx)) {
    throw NotApplicable("illegal move " + std::to_string(vertex) + ": not an oriented vertex");
  }
  return GameState{gcdr(s.graph, vertex), opponent(s.to_move), s.rule};
}

ParityVerdict winner_by_parity(const GameState& s) {
  const auto length = maximal_play_length(s.graph);
  // the player to move makes the last move iff the length is odd
  const Player last_mover_or_none = length % 2 ? s.to_move : opponent(s.to_move);
  const Player winner = s.rule == PlayRule::Normal ? last_mover_or_none : opponent(last_mover_or_none);
  return {winner, length};
}

namespace {

struct BudgetExceeded {};

class Minimax {
 public:
  Minimax(PlayRule rule, std::size_t budget) : rule_(rule), budget_(budget) {}

  // True iff the player to move wins.
  bool mover_wins(const OrientedGraph& g) {
    auto key = g.key();
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (memo_.size() >= budget_) throw BudgetExceeded{};
    const auto moves = g.oriented_labels();
    bool win;
    if (moves.empty()) {
      win = rule_ == PlayRule::Misere;
    } else {
      win = false;
      for (int v : moves) {
        if (!mover_wins(gcdr(g, v))) {
          win = true;
          break;
        }
      }
    }
    memo_.emplace(std::move(key), win);
    return win;
  }

  std::size_t positions() const { return memo_.size(); }

 private:
  PlayRule rule_;
  std::size_t budget_;
  std::unordered_map<std::string, bool> memo_;
};

}  // namespace

MinimaxVerdict winner_by_minimax(const GameState& s, std::size_t max_positions) {
  Minimax solver(s.rule, max_positions);
  MinimaxVerdict verdict;
  try {
    verdict.winner = solver.mover_wins(s.graph) ? s.to_move : opponent(s.to_move);
  } catch (const BudgetExceeded&) {
    verdict.winner.reset();
  }
  verdict.positions = solver.positions();
  return verdict;
}

std::vector<GamePly> play_out(const GameState& s) {
  std::vector<GamePly> plies;
  GameState cur = s;
  for (auto moves = legal_moves(cur); !moves.empty(); moves = legal_moves(cur)) {
    const int v = moves.front();
    const Player mover = cur.to_move;
    cur = play(cur, v);
    plies.push_back({plies.size() + 1, mover, v, legal_moves(cur).size()});
  }
  return plies;
}

std::string format_game_trace(std::span<const GamePly> plies, LabelStyle style) {
  std::string out;
  for (const auto& p : plies) {
    out += std::to_string(p.ply) + " " + to_string(p.player) + " " +
           (style == LabelStyle::Pointer ? to_string(Pointer{p.vertex}) : std::to_string(p.vertex)) + " " +
           std::to_string(p.remaining_oriented) + "\n";
  }
  return out;
}

}  // namespace cdrkit
