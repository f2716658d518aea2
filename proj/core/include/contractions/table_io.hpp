#ifndef CONTRACTIONS_TABLE_IO_HPP_
#define CONTRACTIONS_TABLE_IO_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "contractions/big_count.hpp"
#include "contractions/count_table.hpp"

namespace contractions {

// Generic exact-integer grid output. Counts always serialize as decimal
// strings; key values are small integers. CSV: header row naming the key
// columns then "count", one row per cell, LF line endings.
using TableRows = std::vector<std::pair<std::vector<int>, BigCount>>;
using KeyValueList = std::vector<std::pair<std::string, std::string>>;

void write_text(std::ostream& out, const std::vector<std::string>& columns,
                const TableRows& rows);
void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const TableRows& rows);
void write_json(std::ostream& out, const std::vector<std::string>& columns,
                const TableRows& rows, const KeyValueList& metadata);

void write_text(std::ostream& out, const CountTable& table);
void write_csv(std::ostream& out, const CountTable& table);
void write_json(std::ostream& out, const CountTable& table);

struct CsvTable {
  std::vector<std::string> columns;
  TableRows rows;
};

/// Parses output of write_csv; counts come back exactly (string decimals).
CsvTable read_csv(std::istream& in);

/// Parses output of write_json(CountTable) back into an identical table.
CountTable read_json_table(std::istream& in);

}  // namespace contractions

#endif  // CONTRACTIONS_TABLE_IO_HPP_
