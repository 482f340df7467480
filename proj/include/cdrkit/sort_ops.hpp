#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdrkit/perm.hpp"

namespace cdrkit {

struct CdrMove {
  Pointer pointer;
  auto operator<=>(const CdrMove&) const = default;
};

/// Unordered pointer pair; canonical form has p < q.
struct CdsMove {
  Pointer p;
  Pointer q;

  CdsMove() = default;
  CdsMove(Pointer a, Pointer b);
  auto operator<=>(const CdsMove&) const = default;
};

std::string to_string(const CdrMove& m);
std::string to_string(const CdsMove& m);

bool cdr_applicable(const SignedPermutation& perm, CdrMove m);
/// Reverses and negates the block between the pointer's two cuts.
/// Throws NotApplicable when the two entries carry equal signs.
SignedPermutation apply_cdr(const SignedPermutation& perm, CdrMove m);

bool cds_applicable(const SignedPermutation& perm, const CdsMove& m);
/// Swaps the blocks between cuts 1-2 and 3-4 of the interleaved pair.
/// Throws NotApplicable unless the arcs alternate and each pointer's two
/// entries share a sign.
SignedPermutation apply_cds(const SignedPermutation& perm, const CdsMove& m);

/// Lenient forms: return the input unchanged and false when not applicable.
std::pair<SignedPermutation, bool> try_apply_cdr(const SignedPermutation& perm, CdrMove m);
std::pair<SignedPermutation, bool> try_apply_cds(const SignedPermutation& perm, const CdsMove& m);

/// Ascending pointer order.
std::vector<CdrMove> applicable_cdr_moves(const SignedPermutation& perm);
/// Lexicographic (p, q) order with p < q.
std::vector<CdsMove> applicable_cds_moves(const SignedPermutation& perm);

bool is_cdr_fixed_point(const SignedPermutation& perm);
bool is_cds_fixed_point(const SignedPermutation& perm);

enum class MoveKind { Cdr, Cds };

struct TraceStep {
  MoveKind kind;
  std::vector<Pointer> pointers;  // one for cdr, two for cds
  SignedPermutation result;
};

/// Ordered record of applied operations.
class SortTrace {
 public:
  explicit SortTrace(SignedPermutation initial) : initial_(std::move(initial)) {}

  const SignedPermutation& initial() const { return initial_; }
  const SignedPermutation& current() const { return steps_.empty() ? initial_ : steps_.back().result; }
  const std::vector<TraceStep>& steps() const { return steps_; }
  std::size_t count(MoveKind kind) const;

  const SignedPermutation& push_cdr(CdrMove m);
  const SignedPermutation& push_cds(const CdsMove& m);

  /// Re-applies every step from the initial permutation; true iff each
  /// recorded result is reproduced.
  bool replay_ok() const;

 private:
  SignedPermutation initial_;
  std::vector<TraceStep> steps_;
};

/// Line records: "<step> cdr <i> <perm>" / "<step> cds <i>,<j> <perm>",
/// preceded by "# initial <perm>".
std::string format_trace(const SortTrace& trace);

}  // namespace cdrkit
