#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cdrkit/errors.hpp"
#include "cdrkit/sort_ops.hpp"

using namespace cdrkit;

namespace {

SignedPermutation P(std::vector<int> e) { return SignedPermutation(std::move(e)); }

// Position keys 2*(1-based index)+side of pointer i's two ends, derived from
// the values directly: entry |i| carries the head, entry |i+1| the tail.
std::pair<std::size_t, std::size_t> keys_by_value(const SignedPermutation& p, int i) {
  const auto a = p.index_of_value(i) + 1;
  const auto b = p.index_of_value(i + 1) + 1;
  const std::size_t head = 2 * a + (p[a - 1] > 0 ? 1 : 0);
  const std::size_t tail = 2 * b + (p[b - 1] > 0 ? 0 : 1);
  return {std::min(head, tail), std::max(head, tail)};
}

std::size_t gap(std::size_t key) { return (key - 1) / 2; }

std::optional<SignedPermutation> cdr_reference(const SignedPermutation& p, int i) {
  const auto a = p.index_of_value(i);
  const auto b = p.index_of_value(i + 1);
  if ((p[a] > 0) == (p[b] > 0)) return std::nullopt;
  const auto [k1, k2] = keys_by_value(p, i);
  const auto c1 = gap(k1);
  const auto c2 = gap(k2);
  auto e = p.vector();
  std::reverse(e.begin() + static_cast<long>(c1), e.begin() + static_cast<long>(c2));
  for (auto k = c1; k < c2; ++k) e[k] = -e[k];
  return P(e);
}

std::optional<SignedPermutation> cds_reference(const SignedPermutation& p, int i, int j) {
  auto same_sign = [&](int x) { return (p[p.index_of_value(x)] > 0) == (p[p.index_of_value(x + 1)] > 0); };
  if (!same_sign(i) || !same_sign(j)) return std::nullopt;
  const auto [a1, a2] = keys_by_value(p, i);
  const auto [b1, b2] = keys_by_value(p, j);
  const bool interleaved = (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
  if (!interleaved) return std::nullopt;
  std::array<std::size_t, 4> g{gap(a1), gap(a2), gap(b1), gap(b2)};
  std::sort(g.begin(), g.end());
  const auto& e = p.vector();
  auto seg = [&](std::size_t from, std::size_t to) {
    return std::vector<int>(e.begin() + static_cast<long>(from), e.begin() + static_cast<long>(to));
  };
  std::vector<int> out = seg(0, g[0]);
  for (auto part : {seg(g[2], g[3]), seg(g[1], g[2]), seg(g[0], g[1]), seg(g[3], e.size())}) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return P(out);
}

bool adjacent_pair(const SignedPermutation& p, int i) {
  const auto a = p.index_of_value(i);
  const auto b = p.index_of_value(i + 1);
  if (p[a] > 0) return p[b] > 0 && b == a + 1;
  return p[b] < 0 && a == b + 1;
}

}  // namespace

TEST_CASE("cdr worked examples") {
  CHECK(cdr_applicable(P({-2, 1, -4, 3}), CdrMove{Pointer{2}}));
  CHECK_FALSE(cdr_applicable(P({1, 2}), CdrMove{Pointer{1}}));
  CHECK(cdr_applicable(P({1, 3, 5, -2, -6, 4}), CdrMove{Pointer{5}}));

  CHECK(apply_cdr(P({-2, 1, -4, 3}), CdrMove{Pointer{2}}) == P({4, -1, 2, 3}));
  CHECK(apply_cdr(P({1, 3, 5, -2, -6, 4}), CdrMove{Pointer{5}}) == P({1, 3, 5, 6, 2, 4}));
  const auto half = apply_cdr(P({-2, 1, 3}), CdrMove{Pointer{1}});
  CHECK(half == P({-2, -1, 3}));
  CHECK(apply_cdr(half, CdrMove{Pointer{2}}) == P({1, 2, 3}));
}

TEST_CASE("cdr case table") {
  // x = i leads, head of x on the right of a positive x
  CHECK(apply_cdr(P({1, -2, -4, 3}), CdrMove{Pointer{2}}) == P({1, 4, 2, 3}));
  // x = i leads as a negative entry
  CHECK(apply_cdr(P({2, 4, -3, 1}), CdrMove{Pointer{2}}) == P({2, 3, -4, 1}));
}

TEST_CASE("cdr errors") {
  CHECK_THROWS_AS(apply_cdr(P({1, 2, 3}), CdrMove{Pointer{1}}), NotApplicable);
  CHECK_THROWS_AS(apply_cdr(P({1, 2, 3}), CdrMove{Pointer{3}}), std::out_of_range);
  CHECK_THROWS_AS(cdr_applicable(P({1, 2, 3}), CdrMove{Pointer{0}}), std::out_of_range);
  auto [same, ok] = try_apply_cdr(P({1, 2}), CdrMove{Pointer{1}});
  CHECK_FALSE(ok);
  CHECK(same == P({1, 2}));
}

TEST_CASE("cds worked examples") {
  const auto a = P({3, 6, 5, 2, 4, 8, 1, 7});
  CHECK(cds_applicable(a, CdsMove(Pointer{3}, Pointer{6})));
  CHECK(apply_cds(a, CdsMove(Pointer{3}, Pointer{6})) == P({3, 4, 8, 1, 5, 2, 6, 7}));
  CHECK(apply_cds(a, CdsMove(Pointer{6}, Pointer{3})) == P({3, 4, 8, 1, 5, 2, 6, 7}));

  CHECK(apply_cds(P({1, 3, 5, 6, 2, 4}), CdsMove(Pointer{1}, Pointer{2})) == P({1, 2, 3, 5, 6, 4}));

  const auto nova_end = P({-8, -7, -6, -4, -5, -3, -2, -1});
  CHECK(cds_applicable(nova_end, CdsMove(Pointer{4}, Pointer{5})));
  CHECK(apply_cds(nova_end, CdsMove(Pointer{4}, Pointer{5})) == SignedPermutation::reverse_identity(8));

  const auto id = SignedPermutation::identity(4);
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) CHECK_FALSE(cds_applicable(id, CdsMove(Pointer{i}, Pointer{j})));
  }
}

TEST_CASE("cds case table") {
  CHECK(apply_cds(P({2, 3, 4, 6, 1, 7, 5}), CdsMove(Pointer{1}, Pointer{4})) == P({7, 6, 1, 2, 3, 4, 5}));
  CHECK(apply_cds(P({6, 1, 5, 3, 7, 2, 8, 4}), CdsMove(Pointer{1}, Pointer{3})) ==
        P({6, 1, 2, 8, 7, 5, 3, 4}));
  CHECK(apply_cds(P({6, 1, 7, 5, 8, 2, 3, 4, 9}), CdsMove(Pointer{1}, Pointer{4})) ==
        P({6, 1, 2, 3, 4, 5, 8, 7, 9}));
  CHECK(apply_cds(P({6, 2, 3, 5, 7, 1, 8, 4, 9}), CdsMove(Pointer{1}, Pointer{4})) ==
        P({6, 8, 4, 5, 7, 1, 2, 3, 9}));
}

TEST_CASE("cds errors") {
  CHECK_THROWS_AS(apply_cds(P({1, 2, 3}), CdsMove(Pointer{1}, Pointer{2})), NotApplicable);
  CHECK_THROWS_AS(cds_applicable(P({1, 2, 3}), CdsMove(Pointer{1}, Pointer{1})), std::invalid_argument);
  CHECK_THROWS_AS(cds_applicable(P({1, 2, 3}), CdsMove(Pointer{1}, Pointer{5})), std::out_of_range);
  // interleaved arcs, but (1,2) joins entries of opposite sign
  CHECK_FALSE(cds_applicable(P({2, -1, 3}), CdsMove(Pointer{1}, Pointer{2})));
}

TEST_CASE("move lists and fixed points") {
  std::vector<CdrMove> expected{{Pointer{1}}, {Pointer{2}}, {Pointer{5}}};
  CHECK(applicable_cdr_moves(P({1, 3, 5, -2, -6, 4})) == expected);

  const auto gamma = P({1, 3, 5, 6, 2, 4});
  CHECK(applicable_cdr_moves(gamma).empty());
  CHECK(is_cdr_fixed_point(gamma));
  const auto cds = applicable_cds_moves(gamma);
  CHECK(std::find(cds.begin(), cds.end(), CdsMove(Pointer{1}, Pointer{2})) != cds.end());
  CHECK(std::is_sorted(cds.begin(), cds.end()));

  CHECK(is_cdr_fixed_point(SignedPermutation::identity(5)));
  CHECK(is_cds_fixed_point(SignedPermutation::identity(5)));
  CHECK_FALSE(is_cdr_fixed_point(P({-2, 1, -4, 3})));
}

TEST_CASE("random moves agree with the by-value reference and keep their invariants") {
  std::mt19937_64 rng(2024);
  std::size_t cdr_checked = 0;
  std::size_t cds_checked = 0;
  while (cdr_checked + cds_checked < 100'000) {
    const auto p = random_signed_permutation(2 + rng() % 11, rng);
    const int n = static_cast<int>(p.size());
    const int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));

    const auto ref = cdr_reference(p, i);
    REQUIRE(cdr_applicable(p, CdrMove{Pointer{i}}) == ref.has_value());
    if (ref) {
      const auto q = apply_cdr(p, CdrMove{Pointer{i}});
      REQUIRE(q == *ref);
      REQUIRE(adjacent_pair(q, i));
      REQUIRE_FALSE(cdr_applicable(q, CdrMove{Pointer{i}}));
      ++cdr_checked;
    }

    if (n < 3) continue;
    const int j = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
    if (i == j) continue;
    const CdsMove m(Pointer{i}, Pointer{j});
    const auto cref = cds_reference(p, i, j);
    REQUIRE(cds_applicable(p, m) == cref.has_value());
    if (cref) {
      const auto q = apply_cds(p, m);
      REQUIRE(q == *cref);
      REQUIRE(adjacent_pair(q, i));
      REQUIRE(adjacent_pair(q, j));
      auto before = p.vector();
      auto after = q.vector();
      std::sort(before.begin(), before.end());
      std::sort(after.begin(), after.end());
      REQUIRE(before == after);
      ++cds_checked;
    }
  }
  CHECK(cdr_checked > 10'000);
  CHECK(cds_checked > 1'000);
}

TEST_CASE("trace records and replays") {
  SortTrace trace(P({1, 3, 5, -2, -6, 4}));
  trace.push_cdr(CdrMove{Pointer{5}});
  trace.push_cds(CdsMove(Pointer{1}, Pointer{2}));
  trace.push_cds(CdsMove(Pointer{3}, Pointer{4}));
  CHECK(is_identity(trace.current()));
  CHECK(trace.count(MoveKind::Cdr) == 1);
  CHECK(trace.count(MoveKind::Cds) == 2);
  CHECK(trace.replay_ok());
  CHECK(format_trace(trace) ==
        "# initial [1, 3, 5, -2, -6, 4]\n"
        "1 cdr 5 [1, 3, 5, 6, 2, 4]\n"
        "2 cds 1,2 [1, 2, 3, 5, 6, 4]\n"
        "3 cds 3,4 [1, 2, 3, 4, 5, 6]\n");
  CHECK_THROWS_AS(trace.push_cdr(CdrMove{Pointer{1}}), NotApplicable);
  CHECK(trace.steps().size() == 3);
}
