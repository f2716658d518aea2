#ifndef CONTRACTIONS_VERIFY_HPP_
#define CONTRACTIONS_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "contractions/big_count.hpp"

namespace contractions {

enum class CheckKind {
  formula_vs_oracle,
  identity,
  sequence_prefix,
  bijection,
  closure,
  convexity,
};

enum class ExpectedRelation { equal, documented_mismatch };

enum class CheckStatus { pass, fail, documented_mismatch };

std::string_view check_status_name(CheckStatus status);

/// One coordinate tuple of a check's parameter grid, e.g. {{"n",3},{"p",2}}.
struct GridPoint {
  std::vector<std::pair<std::string, int>> coords;
  std::string to_string() const;  // "n=3,p=2"; "-" when empty

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

/// What a check produced at one grid point. For value comparisons both sides
/// are set; property-style checks only report agree.
struct PointResult {
  std::optional<BigCount> lhs;  // formula-route value
  std::optional<BigCount> rhs;  // oracle-route value
  bool agree = false;
};

/// A registered check. The grid is data, fixed when the suite is built.
struct CheckSpec {
  std::string id;
  CheckKind kind = CheckKind::identity;
  ExpectedRelation expected = ExpectedRelation::equal;
  std::string note;  // required for documented_mismatch checks
  std::vector<GridPoint> grid;
  std::function<PointResult(const GridPoint&)> eval;
};

struct CheckRecord {
  std::string check_id;
  GridPoint point;
  std::string lhs;  // decimal string, "-" if not applicable
  std::string rhs;
  CheckStatus status = CheckStatus::pass;
  std::int64_t wall_micros = 0;
};

struct VerificationReport {
  static constexpr int kSchemaVersion = 1;

  int max_n_filtered = 0;
  int max_n_direct = 0;
  std::vector<CheckRecord> records;  // sorted by (check id, grid point)
  std::vector<std::pair<std::string, std::string>> notes;  // check id -> note

  std::size_t pass_count() const;
  std::size_t fail_count() const;
  std::size_t mismatch_count() const;
  bool ok() const { return fail_count() == 0; }

  /// Stable one-record-per-line text form; timing fields are not serialized
  /// so identical runs produce identical bytes.
  void write(std::ostream& out) const;
  void append(const VerificationReport& fragment);
};

/// All registered checks for the given bounds. Requires
/// 2 <= max_n_filtered <= 8 and max_n_filtered <= max_n_direct <= 14.
std::vector<CheckSpec> build_suite(int max_n_filtered, int max_n_direct);

/// Executes every registered check. Deterministic up to timing fields.
VerificationReport run_suite(int max_n_filtered, int max_n_direct);

/// Report fragment comparing one registered sequence against the library
/// value for n = 0..n_max. Throws std::invalid_argument for an unknown name.
VerificationReport check_sequence(std::string_view name, int n_max);

}  // namespace contractions

#endif  // CONTRACTIONS_VERIFY_HPP_
