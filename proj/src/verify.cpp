#include "cdrkit/verify.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <sstream>

#include "cdrkit/overlap_graph.hpp"

namespace cdrkit {

namespace {

constexpr std::array<std::pair<Property, std::string_view>, 6> kNames{{
    {Property::Parity, "parity"},
    {Property::Rescue, "rescue"},
    {Property::Steps, "steps"},
    {Property::SameLength, "same-length"},
    {Property::Commutation, "commutation"},
    {Property::CdsSameLength, "cds-same-length"},
}};

std::string join_lengths(const LengthCounts& counts) {
  std::string out;
  for (const auto& [len, count] : counts) {
    if (!out.empty()) out += ",";
    out += std::to_string(len);
  }
  return out.empty() ? "-" : out;
}

CaseRecord make(const SignedPermutation& perm, CaseStatus status, std::string counters) {
  return CaseRecord{perm, status, std::move(counters)};
}

CaseStatus pass_if(bool ok) { return ok ? CaseStatus::Pass : CaseStatus::Fail; }

CaseRecord check_parity(const SignedPermutation& perm, const SearchOptions& options) {
  const auto profile = maximal_sequence_lengths(perm, options);
  if (!profile.complete) return make(perm, CaseStatus::Fail, "incomplete=1");
  return make(perm, pass_if(profile.single_parity()), "lengths=" + join_lengths(profile.counts));
}

CaseRecord check_rescue(const SignedPermutation& perm, const SearchOptions& options) {
  const auto search = cdr_sortable_search(perm, options);
  if (search.outcome == Outcome::No) return make(perm, CaseStatus::Skip, "sortable=0");
  if (search.outcome == Outcome::Undecided) return make(perm, CaseStatus::Fail, "incomplete=1");
  const auto report = verify_rescue(perm, options);
  if (!report.complete) return make(perm, CaseStatus::Fail, "incomplete=1");
  std::size_t rescued = 0;
  std::size_t positive = 0;
  for (const auto& e : report.entries) {
    rescued += e.rescued() ? 1 : 0;
    const auto entries = e.fixed_point.entries();
    positive += std::all_of(entries.begin(), entries.end(), [](int x) { return x > 0; }) ? 1 : 0;
  }
  const auto total = report.entries.size();
  return make(perm, pass_if(rescued == total && positive == total),
              "fixed_points=" + std::to_string(total) + " rescued=" + std::to_string(rescued) +
                  " all_positive=" + std::to_string(positive));
}

CaseRecord check_steps(const SignedPermutation& perm, const SearchOptions& options) {
  const auto search = cdr_sortable_search(perm, options);
  if (search.outcome == Outcome::No) return make(perm, CaseStatus::Skip, "sortable=0");
  if (search.outcome == Outcome::Undecided) return make(perm, CaseStatus::Fail, "incomplete=1");
  const auto fps = enumerate_cdr_fixed_points(perm, options);
  if (!fps.complete) return make(perm, CaseStatus::Fail, "incomplete=1");
  const auto* id = fps.find(SignedPermutation::identity(perm.size()));
  if (id == nullptr || id->steps.size() != 1) return make(perm, CaseStatus::Fail, "sorting_lengths=ambiguous");
  const auto sorting_length = id->steps.begin()->first;
  std::size_t checks = 0;
  std::size_t bad = 0;
  for (const auto& fp : fps.fixed_points) {
    const auto cds = cds_sortable_greedy(fp.perm);
    for (const auto& [k, count] : fp.steps) {
      ++checks;
      if (!cds.sorted || k + 2 * cds.steps() != sorting_length) ++bad;
    }
  }
  return make(perm, pass_if(bad == 0),
              "L=" + std::to_string(sorting_length) + " checks=" + std::to_string(checks) +
                  " violations=" + std::to_string(bad));
}

CaseRecord check_same_length(const SignedPermutation& perm, const SearchOptions& options) {
  const auto search = cdr_sortable_search(perm, options);
  if (search.outcome == Outcome::No) return make(perm, CaseStatus::Skip, "sortable=0");
  if (search.outcome == Outcome::Undecided) return make(perm, CaseStatus::Fail, "incomplete=1");
  const auto profile = sorting_lengths(perm, options);
  if (!profile.complete) return make(perm, CaseStatus::Fail, "incomplete=1");
  std::uint64_t witnesses = 0;
  for (const auto& [len, count] : profile.counts) witnesses += count;
  return make(perm, pass_if(profile.single_length()),
              "lengths=" + join_lengths(profile.counts) + " witnesses=" + std::to_string(witnesses));
}

CaseRecord check_commutation(const SignedPermutation& perm) {
  const auto g = build_overlap_graph(perm);
  std::size_t moves = 0;
  std::size_t bad = 0;
  for (auto m : applicable_cdr_moves(perm)) {
    ++moves;
    if (build_overlap_graph(apply_cdr(perm, m)) != gcdr(g, m.pointer.low)) ++bad;
  }
  return make(perm, pass_if(bad == 0), "moves=" + std::to_string(moves) + " violations=" + std::to_string(bad));
}

CaseRecord check_cds_same_length(const SignedPermutation& perm, const SearchOptions& options) {
  const auto profile = cds_maximal_lengths(perm, options);
  if (!profile.complete) return make(perm, CaseStatus::Fail, "incomplete=1");
  return make(perm, pass_if(profile.single_length()), "lengths=" + join_lengths(profile.counts));
}

void tally(SweepReport& report) {
  for (const auto& r : report.records) {
    switch (r.status) {
      case CaseStatus::Pass: ++report.passed; break;
      case CaseStatus::Fail: ++report.failed; break;
      case CaseStatus::Skip: ++report.skipped; break;
    }
  }
}

const char* status_name(CaseStatus s) {
  switch (s) {
    case CaseStatus::Pass: return "PASS";
    case CaseStatus::Fail: return "FAIL";
    case CaseStatus::Skip: return "SKIP";
  }
  return "?";
}

CaseRecord check_guarded(Property property, const SignedPermutation& perm, const SearchOptions& options) {
  try {
    return check_property(property, perm, options);
  } catch (const std::exception& e) {
    return make(perm, CaseStatus::Fail, std::string("error=") + e.what());
  }
}

}  // namespace

std::string_view to_string(Property p) {
  for (auto [prop, name] : kNames) {
    if (prop == p) return name;
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view name) {
  for (auto [prop, n] : kNames) {
    if (n == name) return prop;
  }
  return std::nullopt;
}

const std::vector<Property>& all_properties() {
  static const std::vector<Property> props = [] {
    std::vector<Property> v;
    for (auto [prop, name] : kNames) v.push_back(prop);
    return v;
  }();
  return props;
}

CaseRecord check_property(Property property, const SignedPermutation& perm, const SearchOptions& options) {
  switch (property) {
    case Property::Parity: return check_parity(perm, options);
    case Property::Rescue: return check_rescue(perm, options);
    case Property::Steps: return check_steps(perm, options);
    case Property::SameLength: return check_same_length(perm, options);
    case Property::Commutation: return check_commutation(perm);
    case Property::CdsSameLength: return check_cds_same_length(perm, options);
  }
  throw std::invalid_argument("unknown property");
}

std::size_t sweep_case_count(const SweepConfig& config) {
  return config.exhaustive ? static_cast<std::size_t>(signed_permutation_count(config.n)) : config.samples;
}

std::vector<SignedPermutation> sweep_inputs(const SweepConfig& config) {
  std::vector<SignedPermutation> out;
  const auto count = sweep_case_count(config);
  out.reserve(count);
  if (config.exhaustive) {
    for (std::size_t i = 0; i < count; ++i) out.push_back(signed_permutation_at(config.n, i));
  } else {
    std::mt19937_64 rng(config.seed);
    for (std::size_t i = 0; i < count; ++i) out.push_back(random_signed_permutation(config.n, rng));
  }
  return out;
}

SweepReport run_sweep_serial(const SweepConfig& config) {
  SweepReport report{config, {}, 0, 0, 0};
  for (const auto& perm : sweep_inputs(config)) {
    report.records.push_back(check_guarded(config.property, perm, config.search));
  }
  tally(report);
  return report;
}

SweepReport run_sweep_parallel(const SweepConfig& config) {
  SweepReport report{config, {}, 0, 0, 0};
  const auto count = static_cast<std::int64_t>(sweep_case_count(config));
  std::vector<SignedPermutation> drawn;
  if (!config.exhaustive) drawn = sweep_inputs(config);
  report.records.resize(static_cast<std::size_t>(count));

#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const auto perm = config.exhaustive ? signed_permutation_at(config.n, idx) : drawn[idx];
    report.records[idx] = check_guarded(config.property, perm, config.search);
  }

  tally(report);
  return report;
}

std::string format_report(const SweepReport& report, bool all_records) {
  const auto& c = report.config;
  std::ostringstream out;
  out << "# verify property=" << to_string(c.property) << " n=" << c.n
      << " mode=" << (c.exhaustive ? "exhaustive" : "samples");
  if (!c.exhaustive) out << " seed=" << c.seed;
  out << " cases=" << report.records.size() << "\n";
  for (const auto& r : report.records) {
    if (!all_records && r.status != CaseStatus::Fail) continue;
    out << status_name(r.status) << '\t' << to_string(c.property) << '\t' << format_permutation(r.perm) << '\t'
        << r.counters << "\n";
  }
  out << "# summary property=" << to_string(c.property) << " n=" << c.n << " cases=" << report.records.size()
      << " pass=" << report.passed << " fail=" << report.failed << " skip=" << report.skipped
      << " result=" << (report.ok() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace cdrkit
