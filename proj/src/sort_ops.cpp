#include "cdrkit/sort_ops.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cdrkit {

CdsMove::CdsMove(Pointer a, Pointer b) : p(std::min(a, b)), q(std::max(a, b)) {}

std::string to_string(const CdrMove& m) { return "cdr" + to_string(m.pointer); }
std::string to_string(const CdsMove& m) { return "cds" + to_string(m.p) + to_string(m.q); }

namespace {

bool signs_differ(const std::array<PointerOccurrence, 2>& occ) {
  return occ[0].entry_sign != occ[1].entry_sign;
}

void require_in_range(const SignedPermutation& perm, Pointer p) {
  if (!pointer_in_range(perm, p)) {
    throw std::out_of_range("pointer " + to_string(p) + " out of range for n=" + std::to_string(perm.size()));
  }
}

// Cut positions of a cds move in key order, or nullopt when the arcs do not
// alternate.
std::optional<std::array<std::size_t, 4>> cds_cuts(const std::array<PointerOccurrence, 2>& a,
                                                   const std::array<PointerOccurrence, 2>& b) {
  const bool alternate = (a[0].key() < b[0].key() && b[0].key() < a[1].key() && a[1].key() < b[1].key()) ||
                         (b[0].key() < a[0].key() && a[0].key() < b[1].key() && b[1].key() < a[1].key());
  if (!alternate) return std::nullopt;
  std::array<PointerOccurrence, 4> all{a[0], a[1], b[0], b[1]};
  std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.key() < y.key(); });
  return std::array<std::size_t, 4>{all[0].gap(), all[1].gap(), all[2].gap(), all[3].gap()};
}

}  // namespace

bool cdr_applicable(const SignedPermutation& perm, CdrMove m) {
  require_in_range(perm, m.pointer);
  return signs_differ(occurrences_of(perm, m.pointer));
}

SignedPermutation apply_cdr(const SignedPermutation& perm, CdrMove m) {
  require_in_range(perm, m.pointer);
  const auto occ = occurrences_of(perm, m.pointer);
  if (!signs_differ(occ)) {
    throw NotApplicable("cdr at " + to_string(m.pointer) + " not applicable to " + format_permutation(perm));
  }
  std::vector<int> e = perm.vector();
  const auto first = e.begin() + static_cast<std::ptrdiff_t>(occ[0].gap());
  const auto last = e.begin() + static_cast<std::ptrdiff_t>(occ[1].gap());
  std::reverse(first, last);
  std::for_each(first, last, [](int& x) { x = -x; });
  return make_trusted(std::move(e));
}

bool cds_applicable(const SignedPermutation& perm, const CdsMove& m) {
  require_in_range(perm, m.p);
  require_in_range(perm, m.q);
  if (m.p == m.q) throw std::invalid_argument("cds needs two distinct pointers");
  const auto a = occurrences_of(perm, m.p);
  const auto b = occurrences_of(perm, m.q);
  if (signs_differ(a) || signs_differ(b)) return false;
  return cds_cuts(a, b).has_value();
}

SignedPermutation apply_cds(const SignedPermutation& perm, const CdsMove& m) {
  if (!cds_applicable(perm, m)) {
    throw NotApplicable("cds at " + to_string(m.p) + "," + to_string(m.q) + " not applicable to " +
                        format_permutation(perm));
  }
  const auto cuts = *cds_cuts(occurrences_of(perm, m.p), occurrences_of(perm, m.q));
  const auto& src = perm.vector();
  auto at = [&](std::size_t i) { return src.begin() + static_cast<std::ptrdiff_t>(i); };
  std::vector<int> e;
  e.reserve(src.size());
  e.insert(e.end(), src.begin(), at(cuts[0]));
  e.insert(e.end(), at(cuts[2]), at(cuts[3]));
  e.insert(e.end(), at(cuts[1]), at(cuts[2]));
  e.insert(e.end(), at(cuts[0]), at(cuts[1]));
  e.insert(e.end(), at(cuts[3]), src.end());
  return make_trusted(std::move(e));
}

std::pair<SignedPermutation, bool> try_apply_cdr(const SignedPermutation& perm, CdrMove m) {
  if (!cdr_applicable(perm, m)) return {perm, false};
  return {apply_cdr(perm, m), true};
}

std::pair<SignedPermutation, bool> try_apply_cds(const SignedPermutation& perm, const CdsMove& m) {
  if (!cds_applicable(perm, m)) return {perm, false};
  return {apply_cds(perm, m), true};
}

std::vector<CdrMove> applicable_cdr_moves(const SignedPermutation& perm) {
  std::vector<CdrMove> out;
  for (int i = 1; static_cast<std::size_t>(i) < perm.size(); ++i) {
    // entries |i| and |i+1| of opposite sign
    const int a = perm[perm.index_of_value(i)];
    const int b = perm[perm.index_of_value(i + 1)];
    if ((a > 0) != (b > 0)) out.push_back({Pointer{i}});
  }
  return out;
}

std::vector<CdsMove> applicable_cds_moves(const SignedPermutation& perm) {
  std::vector<CdsMove> out;
  const int n = static_cast<int>(perm.size());
  std::vector<std::array<PointerOccurrence, 2>> occ;
  std::vector<int> homogeneous;
  for (int i = 1; i < n; ++i) {
    auto o = occurrences_of(perm, Pointer{i});
    if (!signs_differ(o)) {
      occ.push_back(o);
      homogeneous.push_back(i);
    }
  }
  for (std::size_t a = 0; a < homogeneous.size(); ++a) {
    for (std::size_t b = a + 1; b < homogeneous.size(); ++b) {
      if (cds_cuts(occ[a], occ[b])) out.emplace_back(Pointer{homogeneous[a]}, Pointer{homogeneous[b]});
    }
  }
  return out;
}

bool is_cdr_fixed_point(const SignedPermutation& perm) { return applicable_cdr_moves(perm).empty(); }
bool is_cds_fixed_point(const SignedPermutation& perm) { return applicable_cds_moves(perm).empty(); }

std::size_t SortTrace::count(MoveKind kind) const {
  return static_cast<std::size_t>(std::count_if(steps_.begin(), steps_.end(), [&](const auto& s) { return s.kind == kind; }));
}

const SignedPermutation& SortTrace::push_cdr(CdrMove m) {
  steps_.push_back({MoveKind::Cdr, {m.pointer}, apply_cdr(current(), m)});
  return steps_.back().result;
}

const SignedPermutation& SortTrace::push_cds(const CdsMove& m) {
  steps_.push_back({MoveKind::Cds, {m.p, m.q}, apply_cds(current(), m)});
  return steps_.back().result;
}

bool SortTrace::replay_ok() const {
  SignedPermutation state = initial_;
  for (const auto& step : steps_) {
    try {
      state = step.kind == MoveKind::Cdr ? apply_cdr(state, CdrMove{step.pointers.at(0)})
                                         : apply_cds(state, CdsMove(step.pointers.at(0), step.pointers.at(1)));
    } catch (const NotApplicable&) {
      return false;
    }
    if (state != step.result) return false;
  }
  return true;
}

std::string format_trace(const SortTrace& trace) {
  std::string out = "# initial " + format_permutation(trace.initial()) + "\n";
  std::size_t index = 0;
  for (const auto& step : trace.steps()) {
    out += std::to_string(++index);
    if (step.kind == MoveKind::Cdr) {
      out += " cdr " + std::to_string(step.pointers[0].low);
    } else {
      out += " cds " + std::to_string(step.pointers[0].low) + "," + std::to_string(step.pointers[1].low);
    }
    out += " " + format_permutation(step.result) + "\n";
  }
  return out;
}

}  // namespace cdrkit
