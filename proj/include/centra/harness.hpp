#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "centra/catalog_io.hpp"
#include "centra/group.hpp"
#include "centra/isoclinism.hpp"

namespace centra {

enum class Status { Holds, HypothesisNotMet, Violation, SkippedBudget, Error };

/// "HOLDS", "HYPOTHESIS_NOT_MET", "VIOLATION", "SKIPPED(budget)", "ERROR"
std::string_view to_string(Status s);

struct TheoremOutcome {
  /// T1..T18, ASSERT for manifest assertions, LOAD for entries that failed to load.
  std::string theorem_id;
  std::string group;
  Status status = Status::Holds;
  std::string detail;
};

/// T1..T18 in order.
const std::vector<std::string>& theorem_ids();

/// Parses "T1,T4-T6,ASSERT" into ids in canonical order. Throws OutOfRange
/// for an unknown id.
std::vector<std::string> parse_theorem_selection(std::string_view text);

struct HarnessOptions {
  /// Empty selects every check, ASSERT included.
  std::vector<std::string> theorems;
  std::uint64_t budget = kDefaultSearchBudget;
};

struct RunReport {
  std::vector<TheoremOutcome> outcomes;

  std::size_t count(Status s) const;
  /// 2 when any check is violated or fails, else 3 when an entry failed to
  /// load, else 0.
  int exit_code() const;
};

/// Outcomes are ordered by manifest entry, then by check id.
RunReport run(const std::vector<CorpusEntry>& corpus, const HarnessOptions& options = {});

/// One JSON object per line.
std::string format_records(const RunReport& r);
/// Aligned columns with a closing count line.
std::string format_table(const RunReport& r);

using Record = std::vector<std::pair<std::string, std::string>>;

/// Flat key/value description of G; manifest assertions are checked against
/// these keys. With `detailed`, per-centralizer and per-z-class lines follow.
Record analysis_record(const Group& g, bool detailed = false);

/// `key value` per line.
std::string format_record_lines(const Record& r);
/// Keys padded to a common width.
std::string format_record_table(const Record& r);

}  // namespace centra
