#ifndef CONTRACTIONS_PARTIAL_INJECTION_HPP_
#define CONTRACTIONS_PARTIAL_INJECTION_HPP_

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace contractions {

// Consecutive differences of a sorted point tuple. Empty when the tuple has
// fewer than two entries; domain gaps are strictly positive, image gaps are
// signed.
using GapTuple = std::vector<int>;

/// A partial injective map on the chain {1..n}.
///
/// Pairs are kept sorted by domain point (canonical form) and equality is
/// structural on (n, pairs). The empty map (no pairs) is valid. Values are
/// immutable after construction.
class PartialInjection {
 public:
  using Pair = std::pair<int, int>;

  /// Throws std::invalid_argument on n < 1, a point outside [1, n], or a
  /// duplicate domain or image point.
  PartialInjection(int n, std::vector<Pair> pairs);

  int n() const noexcept { return n_; }
  int height() const noexcept { return static_cast<int>(pairs_.size()); }
  bool empty() const noexcept { return pairs_.empty(); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }

  std::vector<int> domain() const;
  /// Image points in domain order, i.e. the tuple (a_1α, ..., a_pα).
  std::vector<int> image() const;

  /// (x)α, or nullopt if x is not in the domain.
  std::optional<int> apply(int x) const;
  bool defined_at(int x) const { return apply(x).has_value(); }

  /// One-line form of the two-row notation, e.g. "dom: 1 3 5 | im: 3 5 6".
  std::string to_string() const;

  friend bool operator==(const PartialInjection&, const PartialInjection&) = default;
  friend auto operator<=>(const PartialInjection&, const PartialInjection&) = default;

 private:
  int n_;
  std::vector<Pair> pairs_;
};

PartialInjection identity_map(int n);

/// Composition in left-to-right application order: (x)(αβ) = ((x)α)β, defined
/// on {x ∈ dom α : (x)α ∈ dom β}. Throws std::invalid_argument when the chain
/// sizes differ; cross-n composition is never implicit.
PartialInjection compose(const PartialInjection& alpha, const PartialInjection& beta);

GapTuple gap_of_domain(const PartialInjection& alpha);
GapTuple gap_of_image(const PartialInjection& alpha);

// The predicates below check their defining condition over all pairs of
// domain points. This is the oracle route; it shares nothing with the
// gap-based route.
bool is_contraction(const PartialInjection& alpha);
bool is_order_preserving(const PartialInjection& alpha);
bool is_order_reversing(const PartialInjection& alpha);
bool is_order_decreasing(const PartialInjection& alpha);
bool is_isometry(const PartialInjection& alpha);

/// Gap route: |d_i| <= t_i for every adjacent gap index.
bool is_contraction_via_gaps(const PartialInjection& alpha);

}  // namespace contractions

#endif  // CONTRACTIONS_PARTIAL_INJECTION_HPP_
