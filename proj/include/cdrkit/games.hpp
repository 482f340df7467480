#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdrkit/overlap_graph.hpp"

namespace cdrkit {

enum class Player { One, Two };
/// Normal: the last mover wins. Misere: the last mover loses.
enum class PlayRule { Normal, Misere };

const char* to_string(Player p);
const char* to_string(PlayRule r);
Player opponent(Player p);

/// Players alternately pick an oriented vertex and replace the graph by its
/// gcdr at that vertex; the game ends when no oriented vertex is left.
struct GameState {
  OrientedGraph graph;
  Player to_move = Player::One;
  PlayRule rule = PlayRule::Normal;
};

/// Oriented vertex labels, ascending.
std::vector<int> legal_moves(const GameState& s);
/// Throws NotApplicable for an illegal move.
GameState play(const GameState& s, int vertex);

struct ParityVerdict {
  Player winner;
  std::size_t play_length;  // length of the one play that was followed
};

/// Plays one game to the end with the first legal move each turn and
/// decides by the parity of its length. A player facing no legal move loses
/// under normal play and wins under misere play.
ParityVerdict winner_by_parity(const GameState& s);

struct MinimaxVerdict {
  std::optional<Player> winner;  // empty when the position budget ran out
  std::size_t positions = 0;
};

/// Exact game-tree evaluation with memoization on the graph.
MinimaxVerdict winner_by_minimax(const GameState& s, std::size_t max_positions = 2'000'000);

struct GamePly {
  std::size_t ply;
  Player player;
  int vertex;
  std::size_t remaining_oriented;
};

/// First-legal-move play-out.
std::vector<GamePly> play_out(const GameState& s);
/// One line per ply: "<ply> <player> <vertex> <remaining>".
std::string format_game_trace(std::span<const GamePly> plies, LabelStyle style = LabelStyle::Pointer);

}  // namespace cdrkit
