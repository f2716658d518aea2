#include "contractions/sequences.hpp"

#include <stdexcept>

#include "contractions/formulas.hpp"

namespace contractions {

const std::vector<SequenceInfo>& sequence_registry() {
  static const std::vector<SequenceInfo> registry = {
      {"A094864",
       "order of the monoid of order-preserving partial injective "
       "contractions of an n-chain",
       {1, 2, 6, 18},
       {6, -11, 6, -1}},
      {"A001519",
       "odd-indexed Fibonacci numbers, shifted so a_0 = 1, a_1 = 2; the "
       "order of the order-preserving order-decreasing partial injective "
       "contractions of an n-chain",
       {1, 2, 5, 13, 34, 89},
       {3, -1}},
      {"A001906",
       "even-indexed Fibonacci numbers F_{2n}",
       {0, 1, 3, 8, 21, 55},
       {3, -1}},
  };
  return registry;
}

const SequenceInfo* find_sequence(std::string_view id) {
  for (const SequenceInfo& info : sequence_registry()) {
    if (info.id == id) return &info;
  }
  return nullptr;
}

std::vector<BigCount> expected_sequence_values(const SequenceInfo& info,
                                               int n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  std::vector<BigCount> values;
  values.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (n < static_cast<int>(info.initial.size())) {
      values.emplace_back(info.initial[static_cast<std::size_t>(n)]);
      continue;
    }
    BigCount next = 0;
    for (std::size_t j = 0; j < info.recurrence.size(); ++j) {
      next += info.recurrence[j] * values[values.size() - 1 - j];
    }
    values.push_back(next);
  }
  return values;
}

BigCount sequence_implementation_value(const SequenceInfo& info, int n) {
  if (info.id == "A094864") return order_oci(n);
  if (info.id == "A001519") return order_odci(n);
  if (info.id == "A001906") return fib_identity_even(n);
  throw std::invalid_argument("no implementation value registered for " +
                              info.id);
}

}  // namespace contractions
