#ifndef CONTRACTIONS_COUNT_TABLE_HPP_
#define CONTRACTIONS_COUNT_TABLE_HPP_

#include <map>
#include <string>
#include <vector>

#include "contractions/big_count.hpp"
#include "contractions/family.hpp"

namespace contractions {

enum class TableSchema {
  by_height,         // key (p)
  by_height_fix,     // key (p, m)
  odci_profile,      // key (k-, k+, l+, p)
  odci_profile_fix,  // key (k-, k+, l+, m, p)
};

std::string_view schema_name(TableSchema schema);
const std::vector<std::string>& key_columns(TableSchema schema);

/// Exact counts keyed per schema. Partial tables produced by parallel
/// workers merge by cell-wise addition.
struct CountTable {
  int n = 0;
  Family family = Family::I;
  TableSchema schema = TableSchema::by_height;
  std::map<std::vector<int>, BigCount> cells;

  void add(const std::vector<int>& key, const BigCount& value = 1);
  /// Throws std::invalid_argument unless (n, family, schema) all match.
  void merge(const CountTable& other);

  BigCount total() const;
  BigCount at_or_zero(const std::vector<int>& key) const;

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

}  // namespace contractions

#endif  // CONTRACTIONS_COUNT_TABLE_HPP_
