#include "contractions/count_table.hpp"

#include <stdexcept>

namespace contractions {

std::string_view schema_name(TableSchema schema) {
  switch (schema) {
    case TableSchema::by_height: return "by-height";
    case TableSchema::by_height_fix: return "by-height-fix";
    case TableSchema::odci_profile: return "odci-profile";
    case TableSchema::odci_profile_fix: return "odci-profile-fix";
  }
  return "?";
}

const std::vector<std::string>& key_columns(TableSchema schema) {
  static const std::vector<std::string> height = {"p"};
  static const std::vector<std::string> height_fix = {"p", "m"};
  static const std::vector<std::string> profile = {"k_minus", "k_plus",
                                                   "l_plus", "p"};
  static const std::vector<std::string> profile_fix = {"k_minus", "k_plus",
                                                       "l_plus", "m", "p"};
  switch (schema) {
    case TableSchema::by_height: return height;
    case TableSchema::by_height_fix: return height_fix;
    case TableSchema::odci_profile: return profile;
    case TableSchema::odci_profile_fix: return profile_fix;
  }
  return height;
}

void CountTable::add(const std::vector<int>& key, const BigCount& value) {
  if (key.size() != key_columns(schema).size()) {
    throw std::invalid_argument("key arity does not match table schema");
  }
  cells[key] += value;
}

void CountTable::merge(const CountTable& other) {
  if (n != other.n || family != other.family || schema != other.schema) {
    throw std::invalid_argument("cannot merge tables with different shapes");
  }
  for (const auto& [key, value] : other.cells) cells[key] += value;
}

BigCount CountTable::total() const {
  BigCount sum = 0;
  for (const auto& [key, value] : cells) sum += value;
  return sum;
}

BigCount CountTable::at_or_zero(const std::vector<int>& key) const {
  auto it = cells.find(key);
  return it == cells.end() ? BigCount(0) : it->second;
}

}  // namespace contractions
