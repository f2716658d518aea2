#include "contractions/table_io.hpp"

#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace contractions {

namespace {

using nlohmann::json;

TableRows table_rows(const CountTable& table) {
  TableRows rows;
  rows.reserve(table.cells.size());
  for (const auto& [key, value] : table.cells) rows.emplace_back(key, value);
  return rows;
}

TableSchema schema_from_name(const std::string& name) {
  for (TableSchema schema :
       {TableSchema::by_height, TableSchema::by_height_fix,
        TableSchema::odci_profile, TableSchema::odci_profile_fix}) {
    if (name == schema_name(schema)) return schema;
  }
  throw std::invalid_argument("unknown table schema: " + name);
}

}  // namespace

void write_text(std::ostream& out, const std::vector<std::string>& columns,
                const TableRows& rows) {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    out << (c ? "  " : "") << columns[c];
  }
  out << "  count\n";
  for (const auto& [key, value] : rows) {
    for (std::size_t c = 0; c < key.size(); ++c) {
      out << (c ? "  " : "") << std::setw(static_cast<int>(columns[c].size()))
          << key[c];
    }
    out << "  " << value << "\n";
  }
}

void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const TableRows& rows) {
  for (const std::string& column : columns) out << column << ',';
  out << "count\n";
  for (const auto& [key, value] : rows) {
    for (int k : key) out << k << ',';
    out << value << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<std::string>& columns,
                const TableRows& rows, const KeyValueList& metadata) {
  json doc = json::object();
  for (const auto& [key, value] : metadata) doc[key] = value;
  doc["key_columns"] = columns;
  json cells = json::array();
  for (const auto& [key, value] : rows) {
    json cell = json::object();
    for (std::size_t c = 0; c < key.size(); ++c) cell[columns[c]] = key[c];
    cell["count"] = value.str();  // counts serialize as decimal strings
    cells.push_back(std::move(cell));
  }
  doc["cells"] = std::move(cells);
  out << doc.dump(2) << '\n';
}

void write_text(std::ostream& out, const CountTable& table) {
  write_text(out, key_columns(table.schema), table_rows(table));
}

void write_csv(std::ostream& out, const CountTable& table) {
  write_csv(out, key_columns(table.schema), table_rows(table));
}

void write_json(std::ostream& out, const CountTable& table) {
  write_json(out, key_columns(table.schema), table_rows(table),
             {{"schema", std::string(schema_name(table.schema))},
              {"n", std::to_string(table.n)},
              {"family", std::string(family_name(table.family))}});
}

CsvTable read_csv(std::istream& in) {
  CsvTable out;
  std::string line;
  if (!std::getline(in, line)) {
    throw std::invalid_argument("empty csv input");
  }
  std::stringstream header(line);
  std::string field;
  while (std::getline(header, field, ',')) out.columns.push_back(field);
  if (out.columns.empty() || out.columns.back() != "count") {
    throw std::invalid_argument("csv header must end with a count column");
  }
  out.columns.pop_back();

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::vector<int> key;
    for (std::size_t c = 0; c < out.columns.size(); ++c) {
      if (!std::getline(row, field, ',')) {
        throw std::invalid_argument("csv row with too few fields: " + line);
      }
      key.push_back(std::stoi(field));
    }
    if (!std::getline(row, field, ',')) {
      throw std::invalid_argument("csv row missing count: " + line);
    }
    out.rows.emplace_back(std::move(key), BigCount(field));
  }
  return out;
}

CountTable read_json_table(std::istream& in) {
  json doc = json::parse(in);
  CountTable table;
  table.n = std::stoi(doc.at("n").get<std::string>());
  const auto family = parse_family(doc.at("family").get<std::string>());
  if (!family) {
    throw std::invalid_argument("unknown family in json table");
  }
  table.family = *family;
  table.schema = schema_from_name(doc.at("schema").get<std::string>());
  const auto columns = doc.at("key_columns").get<std::vector<std::string>>();
  for (const json& cell : doc.at("cells")) {
    std::vector<int> key;
    for (const std::string& column : columns) {
      key.push_back(cell.at(column).get<int>());
    }
    table.add(key, BigCount(cell.at("count").get<std::string>()));
  }
  return table;
}

}  // namespace contractions
