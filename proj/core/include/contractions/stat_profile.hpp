#ifndef CONTRACTIONS_STAT_PROFILE_HPP_
#define CONTRACTIONS_STAT_PROFILE_HPP_

#include <optional>

#include "contractions/partial_injection.hpp"

namespace contractions {

/// The full statistic tuple of a map.
///
/// height is the image size p; fix the number of fixed points m. Waists are
/// the min/max of the image, shoulders the min/max of the domain; both are
/// absent for the empty map. min_fixed/max_fixed are the least/greatest fixed
/// point and below_fixed/above_fixed count the domain points strictly below
/// min_fixed / strictly above max_fixed; all four are absent when fix = 0
/// (explicit absence, never a sentinel).
struct StatProfile {
  int height = 0;
  int fix = 0;
  std::optional<int> left_waist;
  std::optional<int> right_waist;
  std::optional<int> left_shoulder;
  std::optional<int> right_shoulder;
  std::optional<int> min_fixed;
  std::optional<int> max_fixed;
  std::optional<int> below_fixed;
  std::optional<int> above_fixed;
};

StatProfile stat_profile(const PartialInjection& alpha);

}  // namespace contractions

#endif  // CONTRACTIONS_STAT_PROFILE_HPP_
