#include "chardeg/records.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

#include "chardeg/errors.hpp"

namespace chardeg::records {

namespace {

using nlohmann::json;

exact::BigInt to_bigint(const json& v) {
  if (v.is_number_unsigned()) return exact::BigInt(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return exact::BigInt(std::to_string(v.get<std::int64_t>()));
  if (v.is_string()) return exact::parse_bigint(v.get<std::string>());
  throw std::invalid_argument("expected an integer or decimal string");
}

}  // namespace

std::vector<DegreeRecord> parse_degree_records(std::istream& in) {
  std::vector<DegreeRecord> out;
  std::set<std::string> names;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    DegreeRecord rec;
    try {
      json j = json::parse(line);
      rec.name = j.at("name").get<std::string>();
      rec.order = to_bigint(j.at("order"));
      for (const auto& pair : j.at("degrees")) {
        if (!pair.is_array() || pair.size() != 2)
          throw std::invalid_argument("degree entries must be [degree, multiplicity]");
        exact::BigInt m = to_bigint(pair[1]);
        if (m < 1 || !m.fits_ulong_p()) throw std::invalid_argument("bad multiplicity");
        rec.degrees.add(to_bigint(pair[0]), m.get_ui());
      }
    } catch (const json::exception& e) {
      throw ParseError(rec.name.empty() ? e.what() : "record " + rec.name + ": " + e.what(), lineno);
    } catch (const std::invalid_argument& e) {
      throw ParseError(rec.name.empty() ? e.what() : "record " + rec.name + ": " + e.what(), lineno);
    }
    if (rec.degrees.empty()) throw ParseError("record " + rec.name + " has no degrees", lineno);
    exact::BigInt sum = rec.degrees.sum_of_squares();
    if (sum != rec.order)
      throw ParseError("record " + rec.name + ": sum of squared degrees " + exact::to_string(sum) +
                           " differs from order " + exact::to_string(rec.order),
                       lineno);
    if (!names.insert(rec.name).second)
      throw ParseError("record " + rec.name + " repeats an earlier name", lineno);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<DegreeRecord> ingest_degree_records(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open degree records: " + path);
  return parse_degree_records(in);
}

}  // namespace chardeg::records
