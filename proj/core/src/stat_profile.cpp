#include "contractions/stat_profile.hpp"

#include <algorithm>

namespace contractions {

StatProfile stat_profile(const PartialInjection& alpha) {
  StatProfile s;
  const auto& pairs = alpha.pairs();
  s.height = alpha.height();
  if (pairs.empty()) return s;

  s.left_shoulder = pairs.front().first;
  s.right_shoulder = pairs.back().first;
  auto [min_it, max_it] = std::minmax_element(
      pairs.begin(), pairs.end(),
      [](const auto& a, const auto& b) { return a.second < b.second; });
  s.left_waist = min_it->second;
  s.right_waist = max_it->second;

  for (const auto& [x, y] : pairs) {
    if (x != y) continue;
    ++s.fix;
    if (!s.min_fixed) s.min_fixed = x;  // pairs are sorted by domain point
    s.max_fixed = x;
  }
  if (s.fix > 0) {
    int below = 0;
    int above = 0;
    for (const auto& [x, y] : pairs) {
      if (x < *s.min_fixed) ++below;
      if (x > *s.max_fixed) ++above;
    }
    s.below_fixed = below;
    s.above_fixed = above;
  }
  return s;
}

}  // namespace contractions
