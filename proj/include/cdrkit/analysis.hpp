#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cdrkit/overlap_graph.hpp"
#include "cdrkit/perm.hpp"
#include "cdrkit/sort_ops.hpp"

namespace cdrkit {

/// Tri-state answer; Undecided means the state budget ran out.
enum class Outcome { Yes, No, Undecided };

struct SearchOptions {
  std::size_t max_states = 10'000'000;
  /// Memoize on collapse_adjacencies(state) instead of the raw state.
  bool collapse = false;
};

// ---- oriented pointer sequences -------------------------------------------

enum class SequenceClass { NotOriented, Oriented, Maximal, Total };

/// Replays the sequence through gcdr. Oriented: every vertex was oriented
/// when chosen. Maximal: additionally ends with no oriented vertex. Total:
/// additionally ends with only isolated unoriented vertices.
SequenceClass classify_sequence(const OrientedGraph& g, std::span<const Pointer> seq);
SequenceClass classify_sequence(const SignedPermutation& perm, std::span<const Pointer> seq);

/// Applies cdr for each pointer in turn (strict).
SignedPermutation apply_cdr_sequence(const SignedPermutation& perm, std::span<const Pointer> seq);

// ---- sortability -----------------------------------------------------------

struct SortSearchResult {
  Outcome outcome = Outcome::Undecided;
  std::vector<Pointer> witness;  // set when outcome == Yes
  std::size_t states = 0;
};

/// Memoized depth-first search over cdr moves for a path to the identity.
SortSearchResult cdr_sortable_search(const SignedPermutation& perm, const SearchOptions& options = {});
/// Same, with the reverse identity [-n, ..., -1] as target.
SortSearchResult reverse_cdr_sortable_search(const SignedPermutation& perm, const SearchOptions& options = {});

/// "No unoriented component" test on the overlap graph. Sufficient-direction
/// criterion only: [2, 1] passes it but admits no move.
bool cdr_sortable_criterion(const SignedPermutation& perm);

// ---- exhaustive move trees -------------------------------------------------

/// Number of distinct move sequences per length (saturating).
using LengthCounts = std::map<std::size_t, std::uint64_t>;

struct ReachedFixedPoint {
  SignedPermutation perm;
  LengthCounts steps;
};

struct FixedPointEnumeration {
  std::vector<ReachedFixedPoint> fixed_points;  // sorted by permutation
  bool complete = true;
  std::size_t states = 0;

  const ReachedFixedPoint* find(const SignedPermutation& p) const;
};

/// Every cdr fixed point reachable from perm, with the lengths of the cdr
/// sequences reaching it.
FixedPointEnumeration enumerate_cdr_fixed_points(const SignedPermutation& perm, const SearchOptions& options = {});

struct LengthProfile {
  LengthCounts counts;
  bool complete = true;

  bool single_parity() const;
  bool single_length() const { return counts.size() == 1; }
};

/// Lengths of all maximal cdr sequences.
LengthProfile maximal_sequence_lengths(const SignedPermutation& perm, const SearchOptions& options = {});
/// Lengths of all cdr sequences ending at the identity (empty if unsortable).
LengthProfile sorting_lengths(const SignedPermutation& perm, const SearchOptions& options = {});
/// Lengths of all maximal cds sequences.
LengthProfile cds_maximal_lengths(const SignedPermutation& perm, const SearchOptions& options = {});
/// Lengths of all total oriented sequences of an arbitrary oriented graph.
LengthProfile total_sequence_lengths(const OrientedGraph& g, const SearchOptions& options = {});

// ---- total sequences -------------------------------------------------------

struct ExtensionResult {
  Outcome outcome = Outcome::Undecided;
  std::vector<Pointer> sequence;
  std::size_t insert_at = 0;  // number of original pointers before the insertion
  std::size_t inserted = 0;   // always even
};

/// Extends a maximal sequence to a total one by inserting an even-length
/// block before a suffix. Throws std::invalid_argument when maxseq is not
/// maximal for perm's graph. Outcome::No when no such insertion exists
/// (including graphs with an unoriented component).
ExtensionResult extend_to_total(const SignedPermutation& perm, std::span<const Pointer> maxseq,
                                const SearchOptions& options = {});

/// Repeatedly plays the first oriented vertex whose gcdr leaves no
/// unoriented component. Throws std::invalid_argument when the graph has an
/// unoriented component, std::logic_error if no safe vertex is found.
std::vector<Pointer> greedy_safe_total_sequence(const OrientedGraph& g);
std::vector<Pointer> greedy_safe_total_sequence(const SignedPermutation& perm);

// ---- indiscriminate runs ---------------------------------------------------

enum class SelectionPolicy { Canonical, Random };

/// Move chooser. Canonical takes the lowest pointer (lexicographically
/// smallest pair for cds); Random draws uniformly from a seeded stream.
class Selector {
 public:
  explicit Selector(SelectionPolicy policy = SelectionPolicy::Canonical, std::uint64_t seed = 0)
      : policy_(policy), rng_(seed) {}
  std::size_t pick(std::size_t choices);

 private:
  SelectionPolicy policy_;
  std::mt19937_64 rng_;
};

struct CdrRun {
  std::vector<Pointer> pointers;
  SignedPermutation fixed_point = SignedPermutation::identity(1);
};

/// cdr moves until a cdr fixed point.
CdrRun indiscriminate_cdr_run(const SignedPermutation& perm, Selector& selector);

struct CdsRun {
  bool sorted = false;
  std::vector<CdsMove> moves;
  SignedPermutation final_state = SignedPermutation::identity(1);

  std::size_t steps() const { return moves.size(); }
};

/// cds moves until a cds fixed point; sorted iff it is the identity.
CdsRun cds_sortable_greedy(const SignedPermutation& perm, Selector& selector);
CdsRun cds_sortable_greedy(const SignedPermutation& perm);

// ---- properties ------------------------------------------------------------

struct RescueEntry {
  SignedPermutation fixed_point = SignedPermutation::identity(1);
  LengthCounts cdr_steps;
  CdsRun cds;

  bool rescued() const { return cds.sorted; }
};

struct RescueReport {
  SignedPermutation input;
  std::vector<RescueEntry> entries;
  bool complete = true;

  bool all_rescued() const;
};

/// Runs greedy cds from every reachable cdr fixed point. Throws
/// std::invalid_argument when perm is not cdr-sortable.
RescueReport verify_rescue(const SignedPermutation& perm, const SearchOptions& options = {});

struct StepsReport {
  std::size_t k = 0;  // cdr steps to the fixed point
  std::size_t m = 0;  // cds steps from there to the identity
  std::size_t total = 0;
  std::size_t witness_length = 0;  // length of a cdr-only sorting witness
  bool sorted = false;             // cds run reached the identity
  CdrRun cdr_run;
  CdsRun cds_run;

  bool consistent() const { return sorted && total == witness_length; }
};

/// Indiscriminate cdr run (after an optional forced prefix), then greedy
/// cds; total = k + 2m. Throws std::invalid_argument when perm is not
/// cdr-sortable.
StepsReport cdr_steps(const SignedPermutation& perm, Selector& selector, std::span<const Pointer> prefix = {},
                      const SearchOptions& options = {});
StepsReport cdr_steps(const SignedPermutation& perm);

enum class Parity { Even, Odd };
const char* to_string(Parity p);

/// Parity of one canonically chosen maximal cdr sequence.
Parity parity(const SignedPermutation& perm);
/// Same on the graph level (gcdr), for arbitrary oriented graphs.
Parity parity(const OrientedGraph& g);
std::size_t maximal_play_length(const OrientedGraph& g);

}  // namespace cdrkit
