#include "contractions/partial_injection.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace contractions {

PartialInjection::PartialInjection(int n, std::vector<Pair> pairs)
    : n_(n), pairs_(std::move(pairs)) {
  if (n < 1) {
    throw std::invalid_argument("chain size must be at least 1, got " +
                                std::to_string(n));
  }
  std::sort(pairs_.begin(), pairs_.end());
  std::vector<int> image_points;
  image_points.reserve(pairs_.size());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto [x, y] = pairs_[i];
    if (x < 1 || x > n_ || y < 1 || y > n_) {
      throw std::invalid_argument("point outside [1, " + std::to_string(n_) +
                                  "] in pair (" + std::to_string(x) + ", " +
                                  std::to_string(y) + ")");
    }
    if (i > 0 && pairs_[i - 1].first == x) {
      throw std::invalid_argument("duplicate domain point " + std::to_string(x));
    }
    image_points.push_back(y);
  }
  std::sort(image_points.begin(), image_points.end());
  if (std::adjacent_find(image_points.begin(), image_points.end()) !=
      image_points.end()) {
    throw std::invalid_argument("duplicate image point (map not injective)");
  }
}

std::vector<int> PartialInjection::domain() const {
  std::vector<int> out;
  out.reserve(pairs_.size());
  for (const auto& [x, y] : pairs_) out.push_back(x);
  return out;
}

std::vector<int> PartialInjection::image() const {
  std::vector<int> out;
  out.reserve(pairs_.size());
  for (const auto& [x, y] : pairs_) out.push_back(y);
  return out;
}

std::optional<int> PartialInjection::apply(int x) const {
  auto it = std::lower_bound(
      pairs_.begin(), pairs_.end(), x,
      [](const Pair& pair, int value) { return pair.first < value; });
  if (it == pairs_.end() || it->first != x) return std::nullopt;
  return it->second;
}

std::string PartialInjection::to_string() const {
  std::ostringstream out;
  out << "dom:";
  for (const auto& [x, y] : pairs_) out << ' ' << x;
  out << " | im:";
  for (const auto& [x, y] : pairs_) out << ' ' << y;
  return out.str();
}

PartialInjection identity_map(int n) {
  std::vector<PartialInjection::Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(n));
  for (int x = 1; x <= n; ++x) pairs.emplace_back(x, x);
  return PartialInjection(n, std::move(pairs));
}

PartialInjection compose(const PartialInjection& alpha,
                         const PartialInjection& beta) {
  if (alpha.n() != beta.n()) {
    throw std::invalid_argument("cannot compose maps on chains of size " +
                                std::to_string(alpha.n()) + " and " +
                                std::to_string(beta.n()));
  }
  std::vector<PartialInjection::Pair> pairs;
  for (const auto& [x, y] : alpha.pairs()) {
    if (auto z = beta.apply(y)) pairs.emplace_back(x, *z);
  }
  return PartialInjection(alpha.n(), std::move(pairs));
}

GapTuple gap_of_domain(const PartialInjection& alpha) {
  GapTuple gaps;
  const auto& pairs = alpha.pairs();
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    gaps.push_back(pairs[i].first - pairs[i - 1].first);
  }
  return gaps;
}

GapTuple gap_of_image(const PartialInjection& alpha) {
  GapTuple gaps;
  const auto& pairs = alpha.pairs();
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    gaps.push_back(pairs[i].second - pairs[i - 1].second);
  }
  return gaps;
}

bool is_contraction(const PartialInjection& alpha) {
  const auto& pairs = alpha.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (std::abs(pairs[i].second - pairs[j].second) >
          std::abs(pairs[i].first - pairs[j].first)) {
        return false;
      }
    }
  }
  return true;
}

bool is_order_preserving(const PartialInjection& alpha) {
  const auto& pairs = alpha.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (pairs[i].second > pairs[j].second) return false;
    }
  }
  return true;
}

bool is_order_reversing(const PartialInjection& alpha) {
  const auto& pairs = alpha.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (pairs[i].second < pairs[j].second) return false;
    }
  }
  return true;
}

bool is_order_decreasing(const PartialInjection& alpha) {
  for (const auto& [x, y] : alpha.pairs()) {
    if (y > x) return false;
  }
  return true;
}

bool is_isometry(const PartialInjection& alpha) {
  const auto& pairs = alpha.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (std::abs(pairs[i].second - pairs[j].second) !=
          std::abs(pairs[i].first - pairs[j].first)) {
        return false;
      }
    }
  }
  return true;
}

bool is_contraction_via_gaps(const PartialInjection& alpha) {
  const auto& pairs = alpha.pairs();
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    const int t = pairs[i].first - pairs[i - 1].first;
    const int d = pairs[i].second - pairs[i - 1].second;
    if (std::abs(d) > t) return false;
  }
  return true;
}

}  // namespace contractions
