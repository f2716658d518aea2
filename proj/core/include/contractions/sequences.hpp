#ifndef CONTRACTIONS_SEQUENCES_HPP_
#define CONTRACTIONS_SEQUENCES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "contractions/big_count.hpp"

namespace contractions {

/// An embedded, offline integer-sequence reference: OEIS id, a short
/// description, the known initial terms, and the linear recurrence used to
/// extend them (a_n = c_1 a_{n-1} + c_2 a_{n-2} + ...).
struct SequenceInfo {
  std::string id;
  std::string description;
  std::vector<long long> initial;
  std::vector<long long> recurrence;
};

const std::vector<SequenceInfo>& sequence_registry();
const SequenceInfo* find_sequence(std::string_view id);

/// Terms a_0..a_{n_max}: the immutable prefix, then recurrence extension.
std::vector<BigCount> expected_sequence_values(const SequenceInfo& info, int n_max);

/// The library quantity the sequence indexes: |OCI_n| for A094864,
/// |ODCI_n| for A001519 (shifted), F_{2n} via the even binomial sum for
/// A001906.
BigCount sequence_implementation_value(const SequenceInfo& info, int n);

}  // namespace contractions

#endif  // CONTRACTIONS_SEQUENCES_HPP_
