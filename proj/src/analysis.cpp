#include "cdrkit/analysis.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace cdrkit {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const auto max = std::numeric_limits<std::uint64_t>::max();
  return a > max - b ? max : a + b;
}

template <class State>
struct Terminal {
  State state;
  LengthCounts depths;
};

template <class State>
struct Layers {
  std::vector<Terminal<State>> terminals;
  bool complete = true;
  std::size_t states = 0;
};

// Breadth-first over move sequences, merging equal states per depth and
// counting the sequences that reach them. `expand` returns the successors;
// a state without successors is terminal.
template <class State, class Hash, class Expand>
Layers<State> explore_layers(const State& root, Expand expand, std::size_t max_states) {
  Layers<State> out;
  std::unordered_map<State, std::size_t, Hash> terminal_at;
  std::unordered_map<State, std::uint64_t, Hash> frontier{{root, 1}};
  out.states = 1;
  for (std::size_t depth = 0; !frontier.empty(); ++depth) {
    std::unordered_map<State, std::uint64_t, Hash> next;
    for (const auto& [state, count] : frontier) {
      auto successors = expand(state);
      if (successors.empty()) {
        auto [it, inserted] = terminal_at.try_emplace(state, out.terminals.size());
        if (inserted) out.terminals.push_back({state, {}});
        auto& slot = out.terminals[it->second].depths[depth];
        slot = saturating_add(slot, count);
        continue;
      }
      for (auto& s : successors) {
        auto [it, inserted] = next.try_emplace(std::move(s), 0);
        it->second = saturating_add(it->second, count);
        if (inserted && ++out.states > max_states) {
          out.complete = false;
          return out;
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<SignedPermutation> cdr_successors(const SignedPermutation& s) {
  std::vector<SignedPermutation> out;
  for (auto m : applicable_cdr_moves(s)) out.push_back(apply_cdr(s, m));
  return out;
}

std::vector<SignedPermutation> cds_successors(const SignedPermutation& s) {
  std::vector<SignedPermutation> out;
  for (const auto& m : applicable_cds_moves(s)) out.push_back(apply_cds(s, m));
  return out;
}

std::vector<OrientedGraph> gcdr_successors(const OrientedGraph& g) {
  std::vector<OrientedGraph> out;
  for (int l : g.oriented_labels()) out.push_back(gcdr(g, l));
  return out;
}

struct BudgetExceeded {};

class SortSearch {
 public:
  SortSearch(std::function<bool(const SignedPermutation&)> target, const SearchOptions& options)
      : target_(std::move(target)), options_(options) {}

  SortSearchResult run(const SignedPermutation& root) {
    SortSearchResult result;
    try {
      const bool ok = solve(root);
      result.outcome = ok ? Outcome::Yes : Outcome::No;
      if (ok) result.witness = walk(root);
    } catch (const BudgetExceeded&) {
      result.outcome = Outcome::Undecided;
    }
    result.states = expanded_;
    return result;
  }

 private:
  SignedPermutation key_of(const SignedPermutation& s) const { return options_.collapse ? collapse_adjacencies(s) : s; }

  bool solve(const SignedPermutation& s) {
    if (target_(s)) return true;
    auto key = key_of(s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++expanded_ > options_.max_states) throw BudgetExceeded{};
    bool ok = false;
    for (auto m : applicable_cdr_moves(s)) {
      if (solve(apply_cdr(s, m))) {
        ok = true;
        break;
      }
    }
    memo_.emplace(std::move(key), ok);
    return ok;
  }

  // Follows memoized successes from the root to the target.
  std::vector<Pointer> walk(SignedPermutation s) const {
    std::vector<Pointer> path;
    while (!target_(s)) {
      bool advanced = false;
      for (auto m : applicable_cdr_moves(s)) {
        auto child = apply_cdr(s, m);
        bool good = target_(child);
        if (!good) {
          auto it = memo_.find(key_of(child));
          good = it != memo_.end() && it->second;
        }
        if (good) {
          path.push_back(m.pointer);
          s = std::move(child);
          advanced = true;
          break;
        }
      }
      if (!advanced) throw std::logic_error("witness reconstruction lost the path");
    }
    return path;
  }

  std::function<bool(const SignedPermutation&)> target_;
  SearchOptions options_;
  std::unordered_map<SignedPermutation, bool, PermutationHash> memo_;
  std::size_t expanded_ = 0;
};

LengthProfile merge_profiles(const std::vector<ReachedFixedPoint>& points, bool complete) {
  LengthProfile out;
  out.complete = complete;
  for (const auto& fp : points) {
    for (auto [len, count] : fp.steps) {
      auto& slot = out.counts[len];
      slot = saturating_add(slot, count);
    }
  }
  return out;
}

}  // namespace

SequenceClass classify_sequence(const OrientedGraph& g, std::span<const Pointer> seq) {
  OrientedGraph cur = g;
  for (auto p : seq) {
    auto idx = cur.index_of(p.low);
    if (!idx || !cur.oriented(*idx)) return SequenceClass::NotOriented;
    cur = gcdr(cur, p.low);
  }
  if (is_total_terminal(cur)) return SequenceClass::Total;
  if (is_terminal(cur)) return SequenceClass::Maximal;
  return SequenceClass::Oriented;
}

SequenceClass classify_sequence(const SignedPermutation& perm, std::span<const Pointer> seq) {
  return classify_sequence(build_overlap_graph(perm), seq);
}

SignedPermutation apply_cdr_sequence(const SignedPermutation& perm, std::span<const Pointer> seq) {
  SignedPermutation cur = perm;
  for (auto p : seq) cur = apply_cdr(cur, CdrMove{p});
  return cur;
}

SortSearchResult cdr_sortable_search(const SignedPermutation& perm, const SearchOptions& options) {
  return SortSearch([](const SignedPermutation& s) { return is_identity(s); }, options).run(perm);
}

SortSearchResult reverse_cdr_sortable_search(const SignedPermutation& perm, const SearchOptions& options) {
  return SortSearch([](const SignedPermutation& s) { return is_reverse_identity(s); }, options).run(perm);
}

bool cdr_sortable_criterion(const SignedPermutation& perm) {
  return !has_unoriented_component(build_overlap_graph(perm));
}

const ReachedFixedPoint* FixedPointEnumeration::find(const SignedPermutation& p) const {
  auto it = std::lower_bound(fixed_points.begin(), fixed_points.end(), p,
                             [](const ReachedFixedPoint& a, const SignedPermutation& b) { return a.perm < b; });
  return it != fixed_points.end() && it->perm == p ? &*it : nullptr;
}

FixedPointEnumeration enumerate_cdr_fixed_points(const SignedPermutation& perm, const SearchOptions& options) {
  auto layers = explore_layers<SignedPermutation, PermutationHash>(perm, cdr_successors, options.max_states);
  FixedPointEnumeration out;
  out.complete = layers.complete;
  out.states = layers.states;
  for (auto& t : layers.terminals) out.fixed_points.push_back({std::move(t.state), std::move(t.depths)});
  std::sort(out.fixed_points.begin(), out.fixed_points.end(),
            [](const auto& a, const auto& b) { return a.perm < b.perm; });
  return out;
}

bool LengthProfile::single_parity() const {
  if (counts.empty()) return true;
  const auto p = counts.begin()->first % 2;
  return std::all_of(counts.begin(), counts.end(), [&](const auto& kv) { return kv.first % 2 == p; });
}

LengthProfile maximal_sequence_lengths(const SignedPermutation& perm, const SearchOptions& options) {
  auto e = enumerate_cdr_fixed_points(perm, options);
  return merge_profiles(e.fixed_points, e.complete);
}

LengthProfile sorting_lengths(const SignedPermutation& perm, const SearchOptions& options) {
  auto e = enumerate_cdr_fixed_points(perm, options);
  LengthProfile out;
  out.complete = e.complete;
  if (const auto* id = e.find(SignedPermutation::identity(perm.size()))) out.counts = id->steps;
  return out;
}

LengthProfile cds_maximal_lengths(const SignedPermutation& perm, const SearchOptions& options) {
  auto layers = explore_layers<SignedPermutation, PermutationHash>(perm, cds_successors, options.max_states);
  std::vector<ReachedFixedPoint> points;
  for (auto& t : layers.terminals) points.push_back({std::move(t.state), std::move(t.depths)});
  return merge_profiles(points, layers.complete);
}

LengthProfile total_sequence_lengths(const OrientedGraph& g, const SearchOptions& options) {
  auto layers = explore_layers<OrientedGraph, GraphHash>(g, gcdr_successors, options.max_states);
  LengthProfile out;
  out.complete = layers.complete;
  for (const auto& t : layers.terminals) {
    if (!is_total_terminal(t.state)) continue;
    for (auto [len, count] : t.depths) out.counts[len] = saturating_add(out.counts[len], count);
  }
  return out;
}

ExtensionResult extend_to_total(const SignedPermutation& perm, std::span<const Pointer> maxseq,
                                const SearchOptions& options) {
  const auto g0 = build_overlap_graph(perm);
  const auto cls = classify_sequence(g0, maxseq);
  if (cls != SequenceClass::Maximal && cls != SequenceClass::Total) {
    throw std::invalid_argument("sequence is not a maximal oriented sequence");
  }
  ExtensionResult result;
  if (cls == SequenceClass::Total) {
    result.outcome = Outcome::Yes;
    result.sequence.assign(maxseq.begin(), maxseq.end());
    result.insert_at = maxseq.size();
    return result;
  }
  if (has_unoriented_component(g0)) {
    result.outcome = Outcome::No;
    return result;
  }

  const auto m = maxseq.size();
  std::vector<OrientedGraph> prefix{g0};
  for (auto p : maxseq) prefix.push_back(gcdr(prefix.back(), p.low));

  std::size_t budget = options.max_states;
  std::vector<Pointer> inserted;
  // Inserts `remaining` more vertices into `g`, then checks the suffix.
  std::function<bool(const OrientedGraph&, std::size_t, std::size_t)> fill =
      [&](const OrientedGraph& g, std::size_t ell, std::size_t remaining) -> bool {
    if (remaining == 0) {
      std::vector<Pointer> suffix(maxseq.begin() + static_cast<std::ptrdiff_t>(ell), maxseq.end());
      return classify_sequence(g, suffix) == SequenceClass::Total;
    }
    for (int l : g.oriented_labels()) {
      if (budget == 0) throw BudgetExceeded{};
      --budget;
      inserted.push_back(Pointer{l});
      if (fill(gcdr(g, l), ell, remaining - 1)) return true;
      inserted.pop_back();
    }
    return false;
  };

  try {
    for (std::size_t k = 1; 2 * k <= g0.vertex_count(); ++k) {
      for (std::size_t ell = m; ell-- > 0;) {
        inserted.clear();
        if (fill(prefix[ell], ell, 2 * k)) {
          result.outcome = Outcome::Yes;
          result.insert_at = ell;
          result.inserted = 2 * k;
          result.sequence.assign(maxseq.begin(), maxseq.begin() + static_cast<std::ptrdiff_t>(ell));
          result.sequence.insert(result.sequence.end(), inserted.begin(), inserted.end());
          result.sequence.insert(result.sequence.end(), maxseq.begin() + static_cast<std::ptrdiff_t>(ell), maxseq.end());
          return result;
        }
      }
    }
    result.outcome = Outcome::No;
  } catch (const BudgetExceeded&) {
    result.outcome = Outcome::Undecided;
  }
  return result;
}

std::vector<Pointer> greedy_safe_total_sequence(const OrientedGraph& g) {
  if (has_unoriented_component(g)) throw std::invalid_argument("graph has an unoriented component");
  std::vector<Pointer> seq;
  OrientedGraph cur = g;
  while (!is_terminal(cur)) {
    bool moved = false;
    for (int l : cur.oriented_labels()) {
      auto next = gcdr(cur, l);
      if (!has_unoriented_component(next)) {
        seq.push_back(Pointer{l});
        cur = std::move(next);
        moved = true;
        break;
      }
    }
    if (!moved) throw std::logic_error("no safe oriented vertex in a graph without unoriented components");
  }
  return seq;
}

std::vector<Pointer> greedy_safe_total_sequence(const SignedPermutation& perm) {
  return greedy_safe_total_sequence(build_overlap_graph(perm));
}

std::size_t Selector::pick(std::size_t choices) {
  if (choices == 0) throw std::invalid_argument("nothing to pick from");
  if (policy_ == SelectionPolicy::Canonical) return 0;
  return static_cast<std::size_t>(rng_() % choices);
}

CdrRun indiscriminate_cdr_run(const SignedPermutation& perm, Selector& selector) {
  CdrRun run{{}, perm};
  for (auto moves = applicable_cdr_moves(run.fixed_point); !moves.empty();
       moves = applicable_cdr_moves(run.fixed_point)) {
    const auto m = moves[selector.pick(moves.size())];
    run.pointers.push_back(m.pointer);
    run.fixed_point = apply_cdr(run.fixed_point, m);
  }
  return run;
}

CdsRun cds_sortable_greedy(const SignedPermutation& perm, Selector& selector) {
  CdsRun run{false, {}, perm};
  for (auto moves = applicable_cds_moves(run.final_state); !moves.empty();
       moves = applicable_cds_moves(run.final_state)) {
    const auto m = moves[selector.pick(moves.size())];
    run.moves.push_back(m);
    run.final_state = apply_cds(run.final_state, m);
  }
  run.sorted = is_identity(run.final_state);
  return run;
}

CdsRun cds_sortable_greedy(const SignedPermutation& perm) {
  Selector canonical;
  return cds_sortable_greedy(perm, canonical);
}

bool RescueReport::all_rescued() const {
  return complete && std::all_of(entries.begin(), entries.end(), [](const auto& e) { return e.rescued(); });
}

RescueReport verify_rescue(const SignedPermutation& perm, const SearchOptions& options) {
  RescueReport report{perm, {}, true};
  const auto search = cdr_sortable_search(perm, options);
  if (search.outcome == Outcome::No) throw std::invalid_argument(format_permutation(perm) + " is not cdr-sortable");
  if (search.outcome == Outcome::Undecided) {
    report.complete = false;
    return report;
  }
  auto fps = enumerate_cdr_fixed_points(perm, options);
  report.complete = fps.complete;
  for (auto& fp : fps.fixed_points) {
    auto cds = cds_sortable_greedy(fp.perm);
    report.entries.push_back({std::move(fp.perm), std::move(fp.steps), std::move(cds)});
  }
  return report;
}

StepsReport cdr_steps(const SignedPermutation& perm, Selector& selector, std::span<const Pointer> prefix,
                      const SearchOptions& options) {
  const auto search = cdr_sortable_search(perm, options);
  if (search.outcome == Outcome::No) throw std::invalid_argument(format_permutation(perm) + " is not cdr-sortable");
  if (search.outcome == Outcome::Undecided) throw std::runtime_error("search budget exhausted");
  StepsReport report;
  report.witness_length = search.witness.size();
  const auto start = apply_cdr_sequence(perm, prefix);
  report.cdr_run = indiscriminate_cdr_run(start, selector);
  report.cdr_run.pointers.insert(report.cdr_run.pointers.begin(), prefix.begin(), prefix.end());
  report.cds_run = cds_sortable_greedy(report.cdr_run.fixed_point);
  report.k = report.cdr_run.pointers.size();
  report.m = report.cds_run.steps();
  report.total = report.k + 2 * report.m;
  report.sorted = report.cds_run.sorted;
  return report;
}

StepsReport cdr_steps(const SignedPermutation& perm) {
  Selector canonical;
  return cdr_steps(perm, canonical);
}

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity parity(const SignedPermutation& perm) {
  Selector canonical;
  return indiscriminate_cdr_run(perm, canonical).pointers.size() % 2 ? Parity::Odd : Parity::Even;
}

std::size_t maximal_play_length(const OrientedGraph& g) {
  OrientedGraph cur = g;
  std::size_t length = 0;
  for (auto moves = cur.oriented_labels(); !moves.empty(); moves = cur.oriented_labels()) {
    cur = gcdr(cur, moves.front());
    ++length;
  }
  return length;
}

Parity parity(const OrientedGraph& g) { return maximal_play_length(g) % 2 ? Parity::Odd : Parity::Even; }

}  // namespace cdrkit
