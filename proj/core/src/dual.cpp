#include "contractions/dual.hpp"

#include <stdexcept>

#include "contractions/family.hpp"

namespace contractions {

namespace {

// Shared construction: new domain walks the old domain gaps in reverse from
// a_1; new image walks the old image gaps in reverse from a_p's image. The
// construction is an involution on OCI_n ∪ OCI+_n, so theta and its inverse
// differ only in the membership they demand.
PartialInjection reflect(const PartialInjection& alpha) {
  if (alpha.height() <= 1) return alpha;
  const auto& pairs = alpha.pairs();
  const int p = alpha.height();

  std::vector<PartialInjection::Pair> out;
  out.reserve(static_cast<std::size_t>(p));
  int x = pairs.front().first;
  int y = pairs.back().second;
  out.emplace_back(x, y);
  for (int i = p - 1; i >= 1; --i) {
    x += pairs[i].first - pairs[i - 1].first;    // t_i, reversed
    y -= pairs[i].second - pairs[i - 1].second;  // d_i, negated reversed
    out.emplace_back(x, y);
  }
  return PartialInjection(alpha.n(), std::move(out));
}

}  // namespace

PartialInjection theta(const PartialInjection& alpha) {
  if (!in_family(alpha, Family::OCI)) {
    throw std::invalid_argument(
        "theta expects an order-preserving contraction");
  }
  return reflect(alpha);
}

PartialInjection theta_inverse(const PartialInjection& beta) {
  if (!in_family(beta, Family::OCIPlus)) {
    throw std::invalid_argument(
        "theta_inverse expects an order-reversing contraction");
  }
  return reflect(beta);
}

}  // namespace contractions
