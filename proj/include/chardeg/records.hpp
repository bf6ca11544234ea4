#pragma once

// JSONL degree records: {"name": ..., "order": ..., "degrees": [[d, m], ...]}
// per line. order and degrees may be JSON integers or decimal strings.

#include <istream>
#include <string>
#include <vector>

#include "chardeg/degree_multiset.hpp"
#include "chardeg/exact.hpp"

namespace chardeg::records {

struct DegreeRecord {
  std::string name;
  exact::BigInt order;
  DegreeMultiset degrees;
};

/// Blank lines are skipped. Throws ParseError (with the 1-based line) on
/// malformed lines, a sum of squares differing from the order, or a
/// repeated name; the message names the record when it has one.
std::vector<DegreeRecord> parse_degree_records(std::istream& in);
/// Throws ConfigError when the file cannot be opened.
std::vector<DegreeRecord> ingest_degree_records(const std::string& path);

}  // namespace chardeg::records
