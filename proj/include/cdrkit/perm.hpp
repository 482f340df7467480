#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cdrkit/errors.hpp"

namespace cdrkit {

/// Pointer (i, i+1), identified by its low index i.
struct Pointer {
  int low = 0;

  int high() const { return low + 1; }
  auto operator<=>(const Pointer&) const = default;
};

std::string to_string(Pointer p);  // "(i,i+1)"

enum class Side : std::uint8_t { Left = 0, Right = 1 };
enum class PointerEnd : std::uint8_t { Head, Tail };

/// One end of a pointer arc, attached to a side of an entry.
struct PointerOccurrence {
  Pointer pointer;
  std::size_t entry_index = 0;  // 1-based position of the entry
  Side side = Side::Left;
  int entry_sign = 1;
  PointerEnd end = PointerEnd::Head;

  /// Strict linear order of all pointer ends: 2 * entry_index + side bit.
  std::size_t key() const { return 2 * entry_index + static_cast<std::size_t>(side); }
  /// Number of entries strictly to the left of the cut this occurrence marks.
  std::size_t gap() const { return (key() - 1) / 2; }
};

/// A signed permutation [a_1, ..., a_n]: nonzero entries whose absolute
/// values are exactly 1..n. Immutable once built.
class SignedPermutation {
 public:
  /// Validates; throws ParseError naming the offending entry.
  explicit SignedPermutation(std::vector<int> entries);

  static SignedPermutation identity(std::size_t n);
  static SignedPermutation reverse_identity(std::size_t n);

  std::size_t size() const { return entries_.size(); }
  /// 0-based access.
  int operator[](std::size_t i) const { return entries_[i]; }
  std::span<const int> entries() const { return entries_; }
  const std::vector<int>& vector() const { return entries_; }

  /// 0-based index of the entry whose absolute value is v (1..n).
  std::size_t index_of_value(int v) const { return positions_[static_cast<std::size_t>(v)]; }

  bool operator==(const SignedPermutation& other) const { return entries_ == other.entries_; }
  auto operator<=>(const SignedPermutation& other) const { return entries_ <=> other.entries_; }

 private:
  struct Trusted {};
  SignedPermutation(Trusted, std::vector<int> entries);
  void index_positions();

  std::vector<int> entries_;
  std::vector<std::size_t> positions_;  // by absolute value; slot 0 unused

  friend SignedPermutation make_trusted(std::vector<int> entries);
};

/// Skips validation; for internal operations that preserve the invariant.
SignedPermutation make_trusted(std::vector<int> entries);

struct PermutationHash {
  std::size_t operator()(const SignedPermutation& p) const noexcept;
};

SignedPermutation parse_permutation(std::string_view text);
/// One permutation per non-empty line; lines starting with '#' are comments.
std::vector<SignedPermutation> parse_permutation_lines(std::string_view text);
std::string format_permutation(const SignedPermutation& p);

/// The two occurrences of pointer p, ordered by key.
std::array<PointerOccurrence, 2> occurrences_of(const SignedPermutation& perm, Pointer p);
/// All 2(n-1) occurrences of the internal pointers, sorted by key.
std::vector<PointerOccurrence> pointer_occurrences(const SignedPermutation& perm);

bool pointer_in_range(const SignedPermutation& perm, Pointer p);

bool is_identity(const SignedPermutation& p);
bool is_reverse_identity(const SignedPermutation& p);

/// Positions j (1-based) with entry(j+1) == entry(j) + 1, i.e. x, x+1 or
/// -(x+1), -x.
std::vector<std::size_t> find_adjacencies(const SignedPermutation& p);
/// Merges each maximal adjacency run into one entry carrying the run's sign,
/// then renumbers the runs 1..m by their smallest absolute value.
SignedPermutation collapse_adjacencies(const SignedPermutation& p);

/// [-2n, ..., -2, 1, 3, ..., 2n-1, 2n+1]
SignedPermutation sigma(std::size_t n);
/// [-2n, ..., -2, 1, 3, ..., 2n-1]
SignedPermutation tau(std::size_t n);

/// Named permutations from the ciliate literature plus small worked examples.
const std::map<std::string, SignedPermutation>& fixtures();
/// Throws std::out_of_range with the unknown name.
const SignedPermutation& fixture(const std::string& name);

/// Number of signed permutations of length n: 2^n * n!.
std::uint64_t signed_permutation_count(std::size_t n);
/// Bijection [0, count) -> signed permutations of length n. Index order is
/// lexicographic over the unsigned permutation, then the sign mask.
SignedPermutation signed_permutation_at(std::size_t n, std::uint64_t index);
SignedPermutation random_signed_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace cdrkit
