#include "cdrkit/perm.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace cdrkit {

std::string to_string(Pointer p) {
  return "(" + std::to_string(p.low) + "," + std::to_string(p.high()) + ")";
}

SignedPermutation::SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const auto n = entries_.size();
  if (n == 0) throw ParseError("empty permutation", "");
  std::vector<bool> seen(n + 1, false);
  for (int e : entries_) {
    if (e == 0) throw ParseError("zero entry", "0");
    const auto v = static_cast<std::size_t>(std::abs(static_cast<long long>(e)));
    if (v > n) {
      throw ParseError("absolute value " + std::to_string(v) + " out of range 1.." + std::to_string(n),
                       std::to_string(e));
    }
    if (seen[v]) throw ParseError("duplicate absolute value " + std::to_string(v), std::to_string(e));
    seen[v] = true;
  }
  index_positions();
}

SignedPermutation::SignedPermutation(Trusted, std::vector<int> entries) : entries_(std::move(entries)) {
  index_positions();
}

void SignedPermutation::index_positions() {
  positions_.assign(entries_.size() + 1, 0);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    positions_[static_cast<std::size_t>(std::abs(entries_[i]))] = i;
  }
}

SignedPermutation make_trusted(std::vector<int> entries) {
  return SignedPermutation(SignedPermutation::Trusted{}, std::move(entries));
}

SignedPermutation SignedPermutation::identity(std::size_t n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return SignedPermutation(std::move(e));
}

SignedPermutation SignedPermutation::reverse_identity(std::size_t n) {
  std::vector<int> e(n);
  for (std::size_t i = 0; i < n; ++i) e[i] = -static_cast<int>(n - i);
  return SignedPermutation(std::move(e));
}

std::size_t PermutationHash::operator()(const SignedPermutation& p) const noexcept {
  // FNV-1a over the entries
  std::uint64_t h = 1469598103934665603ULL;
  for (int e : p.entries()) {
    h ^= static_cast<std::uint32_t>(e);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (is_blank(s.front()) || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (is_blank(s.back()) || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_entry(std::string_view token) {
  std::string_view digits = token;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  int value = 0;
  const auto* first = digits.data();
  const auto* last = digits.data() + digits.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (digits.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("malformed entry '" + std::string(token) + "'", std::string(token));
  }
  return value;
}

}  // namespace

SignedPermutation parse_permutation(std::string_view text) {
  auto body = trim(text);
  if (body.find('\n') != std::string_view::npos) throw ParseError("newline inside permutation", "\\n");
  if (!body.empty() && body.front() == '[') {
    if (body.back() != ']') throw ParseError("missing closing ']'", std::string(body));
    body = trim(body.substr(1, body.size() - 2));
  } else if (!body.empty() && body.back() == ']') {
    throw ParseError("missing opening '['", std::string(body));
  }
  if (body.empty()) throw ParseError("empty permutation", "");

  std::vector<int> entries;
  std::size_t i = 0;
  bool expect_entry = true;  // false right after an entry
  bool after_comma = false;
  while (i < body.size()) {
    const char c = body[i];
    if (is_blank(c)) {
      ++i;
      continue;
    }
    if (c == ',') {
      if (expect_entry) throw ParseError("empty entry before ','", ",");
      expect_entry = true;
      after_comma = true;
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < body.size() && !is_blank(body[j]) && body[j] != ',') ++j;
    entries.push_back(parse_entry(body.substr(i, j - i)));
    expect_entry = false;
    after_comma = false;
    i = j;
  }
  if (after_comma) throw ParseError("trailing ','", ",");
  return SignedPermutation(std::move(entries));
}

std::vector<SignedPermutation> parse_permutation_lines(std::string_view text) {
  std::vector<SignedPermutation> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (line.empty() || line.front() == '#') continue;
    out.push_back(parse_permutation(line));
  }
  return out;
}

std::string format_permutation(const SignedPermutation& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(p[i]);
  }
  out += "]";
  return out;
}

bool pointer_in_range(const SignedPermutation& perm, Pointer p) {
  return p.low >= 1 && static_cast<std::size_t>(p.low) < perm.size();
}

std::array<PointerOccurrence, 2> occurrences_of(const SignedPermutation& perm, Pointer p) {
  if (!pointer_in_range(perm, p)) {
    throw std::out_of_range("pointer " + to_string(p) + " out of range for n=" + std::to_string(perm.size()));
  }
  // head of |i|: right side if positive, left if negative
  const auto hi = perm.index_of_value(p.low);
  const int hs = perm[hi] > 0 ? 1 : -1;
  PointerOccurrence head{p, hi + 1, hs > 0 ? Side::Right : Side::Left, hs, PointerEnd::Head};
  // tail of |i+1|: left side if positive, right if negative
  const auto ti = perm.index_of_value(p.high());
  const int ts = perm[ti] > 0 ? 1 : -1;
  PointerOccurrence tail{p, ti + 1, ts > 0 ? Side::Left : Side::Right, ts, PointerEnd::Tail};
  if (head.key() < tail.key()) return {head, tail};
  return {tail, head};
}

std::vector<PointerOccurrence> pointer_occurrences(const SignedPermutation& perm) {
  std::vector<PointerOccurrence> out;
  out.reserve(2 * (perm.size() - 1));
  for (int i = 1; static_cast<std::size_t>(i) < perm.size(); ++i) {
    const auto occ = occurrences_of(perm, Pointer{i});
    out.push_back(occ[0]);
    out.push_back(occ[1]);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key() < b.key(); });
  return out;
}

bool is_identity(const SignedPermutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

bool is_reverse_identity(const SignedPermutation& p) {
  const auto n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] != -static_cast<int>(n - i)) return false;
  }
  return true;
}

std::vector<std::size_t> find_adjacencies(const SignedPermutation& p) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    if (p[j + 1] == p[j] + 1) out.push_back(j + 1);
  }
  return out;
}

SignedPermutation collapse_adjacencies(const SignedPermutation& p) {
  struct Run {
    int min_abs;
    int sign;
  };
  std::vector<Run> runs;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const int a = std::abs(p[j]);
    const int s = p[j] > 0 ? 1 : -1;
    if (j > 0 && p[j] == p[j - 1] + 1) {
      runs.back().min_abs = std::min(runs.back().min_abs, a);
    } else {
      runs.push_back({a, s});
    }
  }
  std::vector<int> order(runs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return runs[a].min_abs < runs[b].min_abs; });
  std::vector<int> out(runs.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const auto r = static_cast<std::size_t>(order[rank]);
    out[r] = runs[r].sign * static_cast<int>(rank + 1);
  }
  return make_trusted(std::move(out));
}

SignedPermutation sigma(std::size_t n) {
  if (n == 0) throw std::invalid_argument("sigma(n) requires n >= 1");
  std::vector<int> e;
  e.reserve(2 * n + 1);
  for (std::size_t k = n; k >= 1; --k) e.push_back(-2 * static_cast<int>(k));
  for (std::size_t k = 0; k <= n; ++k) e.push_back(2 * static_cast<int>(k) + 1);
  return SignedPermutation(std::move(e));
}

SignedPermutation tau(std::size_t n) {
  if (n == 0) throw std::invalid_argument("tau(n) requires n >= 1");
  std::vector<int> e;
  e.reserve(2 * n);
  for (std::size_t k = n; k >= 1; --k) e.push_back(-2 * static_cast<int>(k));
  for (std::size_t k = 0; k < n; ++k) e.push_back(2 * static_cast<int>(k) + 1);
  return SignedPermutation(std::move(e));
}

const std::map<std::string, SignedPermutation>& fixtures() {
  static const std::map<std::string, SignedPermutation> table = [] {
    std::map<std::string, SignedPermutation> m;
    auto add = [&](const char* name, std::vector<int> e) { m.emplace(name, SignedPermutation(std::move(e))); };
    add("u_pisces_1", {1, 3, -7, -5, 14, 2, 4, 6, 9, 12, -11, -8, 13, 15, -10});
    add("u_pisces_2", {2, 4, 6, 9, 12, -11, -8, 13, 15, -10, 1, 3, -7, -5, 14});
    add("o_nova_actin1", {3, 5, 4, 6, 8, -2, 1, 7});
    add("alpha_tbp", {1, 3, 5, 7, 9, 11, 2, 4, 6, 8, 10, 12});
    add("T", {1, -5, -2, 4, -3, 6});
    add("S", {-6, 3, -4, 2, 5, -1, 7, 9, 8, 10});
    add("maxseq", {1, 3, 5, -2, -6, 4});
    add("onecomp", {3, -8, -2, 5, 1, -7, 4, 6});
    add("cds_example", {3, 6, 5, 2, 4, 8, 1, 7});
    m.emplace("sigma_16", sigma(16));
    m.emplace("sigma_20", sigma(20));
    m.emplace("sigma_21", sigma(21));
    m.emplace("tau_21", tau(21));
    return m;
  }();
  return table;
}

const SignedPermutation& fixture(const std::string& name) {
  const auto& table = fixtures();
  auto it = table.find(name);
  if (it == table.end()) throw std::out_of_range("unknown fixture '" + name + "'");
  return it->second;
}

std::uint64_t signed_permutation_count(std::size_t n) {
  std::uint64_t c = 1;
  for (std::size_t k = 1; k <= n; ++k) c *= 2 * k;
  return c;
}

SignedPermutation signed_permutation_at(std::size_t n, std::uint64_t index) {
  if (index >= signed_permutation_count(n)) throw std::out_of_range("signed permutation index out of range");
  const std::uint64_t signs = 1ULL << n;
  std::uint64_t sign_mask = index % signs;
  std::uint64_t rank = index / signs;

  std::vector<std::uint64_t> fact(n + 1, 1);
  for (std::size_t k = 1; k <= n; ++k) fact[k] = fact[k - 1] * k;
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> e;
  e.reserve(n);
  for (std::size_t k = n; k >= 1; --k) {
    const auto q = rank / fact[k - 1];
    rank %= fact[k - 1];
    e.push_back(pool[q]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if ((sign_mask >> (n - 1 - i)) & 1U) e[i] = -e[i];
  }
  return make_trusted(std::move(e));
}

SignedPermutation random_signed_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  // Fisher-Yates with explicit draws; std::shuffle's draw pattern is
  // implementation-defined and would break seeded reproducibility.
  for (std::size_t i = n; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng() % i);
    std::swap(e[i - 1], e[j]);
  }
  for (auto& x : e) {
    if (rng() & 1U) x = -x;
  }
  return make_trusted(std::move(e));
}

}  // namespace cdrkit
