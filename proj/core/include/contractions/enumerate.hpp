#ifndef CONTRACTIONS_ENUMERATE_HPP_
#define CONTRACTIONS_ENUMERATE_HPP_

#include <functional>
#include <stdexcept>
#include <vector>

#include "contractions/count_table.hpp"
#include "contractions/family.hpp"
#include "contractions/partial_injection.hpp"

namespace contractions {

// Practicality guards. The filtered path walks all of I_n (|I_8| = 1,441,729,
// |I_9| is already ~17.6M); the direct path only walks the family itself.
inline constexpr int kFilteredGuard = 8;
inline constexpr int kDirectGuard = 14;

/// Thrown when an enumeration would exceed a guard and allow_large is unset.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using MapVisitor = std::function<void(const PartialInjection&)>;

/// Baseline oracle: walks every map of I_n in lexicographic order of
/// (domain set, image tuple) and yields those passing in_family. Membership
/// uses the pairwise predicates only; no gap logic on this path.
void enumerate_filtered(int n, Family family, const MapVisitor& visit,
                        bool allow_large = false);

/// Gap-based construction for the order-restricted families
/// {OCI, OCIPlus, ORCI, ODCI}: height 0..n, domain p-subsets in lexicographic
/// order, then image tuples satisfying gap dominance (sign fixed by the
/// family; ODCI additionally b_1 <= a_1). Yields the same set as
/// enumerate_filtered without materializing I_n. Throws std::invalid_argument
/// for I and CI.
void enumerate_direct(int n, Family family, const MapVisitor& visit,
                      bool allow_large = false);

std::vector<PartialInjection> collect_filtered(int n, Family family,
                                               bool allow_large = false);
std::vector<PartialInjection> collect_direct(int n, Family family,
                                             bool allow_large = false);

enum class CountMethod { auto_select, filtered, direct };

/// Exact counts per height p = 0..n (the p = 0 cell is the empty map).
/// Streams and folds; never materializes the family. workers > 1 splits the
/// stream on the (height, first domain point) prefix and merges partial
/// tables cell-wise.
CountTable count_by_height(int n, Family family,
                           CountMethod method = CountMethod::auto_select,
                           int workers = 1, bool allow_large = false);

/// Exact counts per (height, fixed-point count).
CountTable count_by_height_fix(int n, Family family,
                               CountMethod method = CountMethod::auto_select,
                               int workers = 1, bool allow_large = false);

/// Number of OCI_n maps whose image is exactly the given strictly increasing
/// tuple, by enumeration of domain subsets. Throws std::invalid_argument on a
/// malformed tuple.
BigCount count_with_image(int n, const std::vector<int>& image);

/// Number of ODCI_n maps with left waist k-, right waist k+, right shoulder
/// l+ and height p, by enumeration grouped on StatProfile fields.
/// Requires 1 <= k- <= k+ <= l+ <= n and p >= 1.
BigCount count_odci_profile(int n, int k_minus, int k_plus, int l_plus, int p);

/// As above with the fixed-point count pinned as well.
BigCount count_odci_profile_fix(int n, int k_minus, int k_plus, int l_plus,
                                int m, int p);

// Whole-grid variants: one enumeration pass folded into a table covering
// every populated key.
CountTable count_odci_profiles(int n);
CountTable count_odci_profiles_fix(int n);

}  // namespace contractions

#endif  // CONTRACTIONS_ENUMERATE_HPP_
