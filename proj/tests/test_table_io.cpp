#include <doctest.h>

#include <sstream>

#include "contractions/enumerate.hpp"
#include "contractions/table_io.hpp"

using namespace contractions;

TEST_SUITE("table_io") {

TEST_CASE("csv round trip is exact") {
  const CountTable table = count_by_height_fix(5, Family::OCI);
  std::ostringstream out;
  write_csv(out, table);
  CHECK(out.str().rfind("p,m,count\n", 0) == 0);
  CHECK(out.str().find("\r") == std::string::npos);  // LF endings

  std::istringstream in(out.str());
  const CsvTable parsed = read_csv(in);
  CHECK(parsed.columns == key_columns(table.schema));
  CHECK(parsed.rows.size() == table.cells.size());
  for (const auto& [key, value] : parsed.rows) {
    CHECK(table.at_or_zero(key) == value);
  }
}

TEST_CASE("json round trip reproduces the table exactly") {
  for (const CountTable& table :
       {count_by_height(6, Family::ODCI), count_odci_profiles(4),
        count_by_height_fix(4, Family::ORCI)}) {
    std::ostringstream out;
    write_json(out, table);
    std::istringstream in(out.str());
    CHECK(read_json_table(in) == table);
  }
}

TEST_CASE("counts serialize as decimal strings in json") {
  CountTable table;
  table.n = 3;
  table.family = Family::OCI;
  table.schema = TableSchema::by_height;
  // far beyond 2^64 so a lossy number path would show
  table.add({1}, BigCount("123456789012345678901234567890"));
  std::ostringstream out;
  write_json(out, table);
  CHECK(out.str().find("\"123456789012345678901234567890\"") !=
        std::string::npos);
  std::istringstream in(out.str());
  CHECK(read_json_table(in) == table);
}

TEST_CASE("text format prints one row per cell") {
  std::ostringstream out;
  write_text(out, count_by_height(3, Family::OCI));
  CHECK(out.str() ==
        "p  count\n"
        "0  1\n"
        "1  9\n"
        "2  7\n"
        "3  1\n");
}

TEST_CASE("csv rejects malformed input") {
  std::istringstream empty("");
  CHECK_THROWS(read_csv(empty));
  std::istringstream no_count("p,m\n1,2\n");
  CHECK_THROWS(read_csv(no_count));
  std::istringstream short_row("p,m,count\n1\n");
  CHECK_THROWS(read_csv(short_row));
}

}  // TEST_SUITE
