#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "chardeg/errors.hpp"
#include "chardeg/psl2.hpp"
#include "chardeg/records.hpp"

using namespace chardeg;
using namespace chardeg::records;
using psl2::psl2_degrees;

namespace {

std::vector<DegreeRecord> parse(const std::string& s) {
  std::istringstream in(s);
  return parse_degree_records(in);
}

// Returns the failing line, or 0.
std::size_t error_line(const std::string& s, std::string* message = nullptr) {
  try {
    parse(s);
  } catch (const ParseError& e) {
    if (message) *message = e.what();
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("valid records") {
  auto r = parse(R"({"name":"C2","order":2,"degrees":[[1,2]]})");
  REQUIRE(r.size() == 1);
  CHECK(r[0].name == "C2");
  CHECK(r[0].order == 2);
  CHECK(r[0].degrees == DegreeMultiset({{1, 2}}));
  auto big = parse(R"({"name":"S","order":"1000000000000000000000000","degrees":[["1000000000000",1]]})");
  CHECK(big[0].degrees.max_degree() == BigInt("1000000000000"));
}

TEST_CASE("file ingestion") {
  const std::string dir = CHARDEG_TEST_DATA_DIR;
  auto r = ingest_degree_records(dir + "/good_records.jsonl");
  REQUIRE(r.size() == 2);
  CHECK(r[1].degrees == psl2_degrees(7));
  CHECK_THROWS_AS(ingest_degree_records(dir + "/missing.jsonl"), ConfigError);
  CHECK_THROWS_AS(ingest_degree_records(dir + "/bad_records.jsonl"), ParseError);
}

TEST_CASE("line numbers and record names in errors") {
  std::string msg;
  // 2*1 + 2*4 = 10, so order 10 is consistent and 11 is not.
  CHECK(error_line("{\"name\":\"X\",\"order\":10,\"degrees\":[[1,2],[2,2]]}\n") == 0);
  CHECK(error_line("{\"name\":\"C2\",\"order\":2,\"degrees\":[[1,2]]}\n"
                   "{\"name\":\"X\",\"order\":11,\"degrees\":[[1,2],[2,2]]}\n",
                   &msg) == 2);
  CHECK(msg.find("record X") != std::string::npos);
  CHECK(error_line("\n\n{not json}\n") == 3);
  CHECK(error_line("{\"name\":\"A\",\"order\":1,\"degrees\":[[1,1]]}\n"
                   "{\"name\":\"A\",\"order\":1,\"degrees\":[[1,1]]}\n",
                   &msg) == 2);
  CHECK(msg.find("record A") != std::string::npos);
  CHECK(error_line(R"({"order":1,"degrees":[[1,1]]})") == 1);
  CHECK(error_line(R"({"name":"Z","order":1,"degrees":[[0,1]]})") == 1);
  CHECK(error_line(R"({"name":"Z","order":"x","degrees":[[1,1]]})") == 1);
  CHECK(error_line(R"({"name":"Z","order":1,"degrees":[[1]]})") == 1);
}
