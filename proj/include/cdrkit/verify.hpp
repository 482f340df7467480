#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdrkit/analysis.hpp"

namespace cdrkit {

enum class Property { Parity, Rescue, Steps, SameLength, Commutation, CdsSameLength };

std::string_view to_string(Property p);
std::optional<Property> parse_property(std::string_view name);
const std::vector<Property>& all_properties();

enum class CaseStatus { Pass, Fail, Skip };

struct CaseRecord {
  SignedPermutation perm = SignedPermutation::identity(1);
  CaseStatus status = CaseStatus::Pass;
  std::string counters;  // "key=value" fields, space separated
};

/// Checks one property on one permutation.
///  parity           all maximal cdr sequence lengths share one parity
///  rescue           every reachable cdr fixed point is cds-sortable and
///                   all-positive (Skip when not cdr-sortable)
///  steps            k + 2m equals the sorting length for every fixed point
///                   and every k reaching it (Skip when not cdr-sortable)
///  same-length      all cdr sorting sequences have one length (Skip when
///                   not cdr-sortable)
///  commutation      overlap graph of cdr_p(perm) equals gcdr at p, for
///                   every applicable p
///  cds-same-length  all maximal cds sequences have one length
/// A budget overrun is a Fail with "incomplete=1".
CaseRecord check_property(Property property, const SignedPermutation& perm, const SearchOptions& options = {});

struct SweepConfig {
  Property property = Property::Parity;
  std::size_t n = 1;
  bool exhaustive = true;
  std::size_t samples = 0;  // used when !exhaustive
  std::uint64_t seed = 1;
  SearchOptions search;
};

struct SweepReport {
  SweepConfig config;
  std::vector<CaseRecord> records;  // canonical input order
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;

  bool ok() const { return failed == 0; }
};

std::size_t sweep_case_count(const SweepConfig& config);
/// Input i of the sweep: signed_permutation_at(n, i) when exhaustive, else
/// the i-th draw of a mt19937_64 seeded with config.seed.
std::vector<SignedPermutation> sweep_inputs(const SweepConfig& config);

/// Reference implementation, one input at a time.
SweepReport run_sweep_serial(const SweepConfig& config);
/// OpenMP over inputs; records land in input order, so the report is
/// identical to the serial one.
SweepReport run_sweep_parallel(const SweepConfig& config);

/// Header, one tab-separated record per input ("status property perm
/// counters"; all records, or only failures when all_records is false),
/// then a summary line.
std::string format_report(const SweepReport& report, bool all_records);

}  // namespace cdrkit
