#include "contractions/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "contractions/stat_profile.hpp"

namespace contractions {

namespace {

void check_n(int n) {
  if (n < 1) {
    throw std::invalid_argument("chain size must be at least 1, got " +
                                std::to_string(n));
  }
}

void check_filtered_guard(int n, bool allow_large) {
  if (n > kFilteredGuard && !allow_large) {
    throw GuardError("filtered enumeration over I_" + std::to_string(n) +
                     " exceeds the n <= " + std::to_string(kFilteredGuard) +
                     " guard; set the override to proceed");
  }
}

void check_direct_guard(int n, bool allow_large) {
  if (n > kDirectGuard && !allow_large) {
    throw GuardError("direct enumeration at n = " + std::to_string(n) +
                     " exceeds the n <= " + std::to_string(kDirectGuard) +
                     " guard; set the override to proceed");
  }
}

bool direct_supported(Family family) {
  return family == Family::OCI || family == Family::OCIPlus ||
         family == Family::ORCI || family == Family::ODCI;
}

using Pairs = std::vector<PartialInjection::Pair>;

// ---- filtered path -------------------------------------------------------
//
// Domain subsets in lexicographic order (as sorted sequences, shorter
// prefixes first), and for each domain every injective image tuple in
// lexicographic order. Membership is decided by the pairwise predicates.

void filtered_images(int n, Family family, const std::vector<int>& domain,
                     std::size_t index, Pairs& pairs, std::vector<bool>& used,
                     const MapVisitor& visit) {
  if (index == domain.size()) {
    PartialInjection alpha(n, pairs);
    if (in_family(alpha, family)) visit(alpha);
    return;
  }
  for (int value = 1; value <= n; ++value) {
    if (used[static_cast<std::size_t>(value)]) continue;
    used[static_cast<std::size_t>(value)] = true;
    pairs.emplace_back(domain[index], value);
    filtered_images(n, family, domain, index + 1, pairs, used, visit);
    pairs.pop_back();
    used[static_cast<std::size_t>(value)] = false;
  }
}

void filtered_domains(int n, Family family, int next, std::vector<int>& domain,
                      const MapVisitor& visit) {
  {
    Pairs pairs;
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    filtered_images(n, family, domain, 0, pairs, used, visit);
  }
  for (int a = next; a <= n; ++a) {
    domain.push_back(a);
    filtered_domains(n, family, a + 1, domain, visit);
    domain.pop_back();
  }
}

// One filtered slice: either the empty map (first == 0) or all maps whose
// smallest domain point is `first`. Concatenated in order this reproduces the
// full lexicographic stream.
void filtered_slice(int n, Family family, int first, const MapVisitor& visit) {
  if (first == 0) {
    PartialInjection empty(n, {});
    if (in_family(empty, family)) visit(empty);
    return;
  }
  std::vector<int> domain = {first};
  filtered_domains(n, family, first + 1, domain, visit);
}

// ---- direct path ---------------------------------------------------------
//
// Images are built point by point under the gap-dominance bound
// |b_{i+1} - b_i| <= t_i, with the sign pattern fixed by the family.

void direct_preserving_images(int n, const std::vector<int>& domain,
                              std::size_t index, int prev, Pairs& pairs,
                              const MapVisitor& visit, bool decreasing) {
  const int p = static_cast<int>(domain.size());
  if (index == domain.size()) {
    visit(PartialInjection(n, pairs));
    return;
  }
  const int remaining = p - static_cast<int>(index) - 1;
  int lo, hi;
  if (index == 0) {
    lo = 1;
    hi = n - remaining;
    if (decreasing) hi = std::min(hi, domain[0]);  // b_1 <= a_1 suffices
  } else {
    const int t = domain[index] - domain[index - 1];
    lo = prev + 1;
    hi = std::min(prev + t, n - remaining);
  }
  for (int b = lo; b <= hi; ++b) {
    pairs.emplace_back(domain[index], b);
    direct_preserving_images(n, domain, index + 1, b, pairs, visit,
                             decreasing);
    pairs.pop_back();
  }
}

void direct_reversing_images(int n, const std::vector<int>& domain,
                             std::size_t index, int prev, Pairs& pairs,
                             const MapVisitor& visit) {
  const int p = static_cast<int>(domain.size());
  if (index == domain.size()) {
    visit(PartialInjection(n, pairs));
    return;
  }
  const int remaining = p - static_cast<int>(index) - 1;
  int lo, hi;
  if (index == 0) {
    lo = 1 + remaining;  // must leave room for `remaining` smaller points
    hi = n;
  } else {
    const int t = domain[index] - domain[index - 1];
    lo = std::max(prev - t, 1 + remaining);
    hi = prev - 1;
  }
  for (int b = lo; b <= hi; ++b) {
    pairs.emplace_back(domain[index], b);
    direct_reversing_images(n, domain, index + 1, b, pairs, visit);
    pairs.pop_back();
  }
}

void direct_images_for_domain(int n, Family family,
                              const std::vector<int>& domain,
                              const MapVisitor& visit) {
  const int p = static_cast<int>(domain.size());
  Pairs pairs;
  if (p == 1) {
    // Height-1 maps are simultaneously preserving and reversing.
    const int hi = family == Family::ODCI ? domain[0] : n;
    for (int b = 1; b <= hi; ++b) {
      visit(PartialInjection(n, {{domain[0], b}}));
    }
    return;
  }
  switch (family) {
    case Family::OCI:
      direct_preserving_images(n, domain, 0, 0, pairs, visit, false);
      break;
    case Family::ODCI:
      direct_preserving_images(n, domain, 0, 0, pairs, visit, true);
      break;
    case Family::OCIPlus:
      direct_reversing_images(n, domain, 0, 0, pairs, visit);
      break;
    case Family::ORCI:
      // Disjoint for p >= 2: preserving images first, then reversing.
      direct_preserving_images(n, domain, 0, 0, pairs, visit, false);
      direct_reversing_images(n, domain, 0, 0, pairs, visit);
      break;
    default:
      break;
  }
}

void direct_domains(int n, Family family, int next, int size_left,
                    std::vector<int>& domain, const MapVisitor& visit) {
  if (size_left == 0) {
    direct_images_for_domain(n, family, domain, visit);
    return;
  }
  for (int a = next; a + size_left - 1 <= n; ++a) {
    domain.push_back(a);
    direct_domains(n, family, a + 1, size_left - 1, domain, visit);
    domain.pop_back();
  }
}

// One direct slice: the empty map (p == 0), or all height-p maps whose
// smallest domain point is `first`.
void direct_slice(int n, Family family, int p, int first,
                  const MapVisitor& visit) {
  if (p == 0) {
    visit(PartialInjection(n, {}));
    return;
  }
  std::vector<int> domain = {first};
  direct_domains(n, family, first + 1, p - 1, domain, visit);
}

// ---- slice-parallel counting --------------------------------------------

struct Slice {
  int p;      // -1 for a filtered slice
  int first;  // 0 encodes the empty-map slice
};

std::vector<Slice> make_slices(int n, bool direct) {
  std::vector<Slice> slices;
  if (direct) {
    slices.push_back({0, 0});
    for (int p = 1; p <= n; ++p) {
      for (int first = 1; first + p - 1 <= n; ++first) {
        slices.push_back({p, first});
      }
    }
  } else {
    for (int first = 0; first <= n; ++first) slices.push_back({-1, first});
  }
  return slices;
}

void run_slice(int n, Family family, const Slice& slice,
               const MapVisitor& visit) {
  if (slice.p < 0) {
    filtered_slice(n, family, slice.first, visit);
  } else {
    direct_slice(n, family, slice.p, slice.first, visit);
  }
}

// Folds every slice into a table; workers > 1 pull slices from a shared
// queue and merge their partial tables cell-wise (associative, commutative).
template <typename Fold>
CountTable parallel_count(int n, Family family, bool direct, int workers,
                          TableSchema schema, Fold fold) {
  CountTable result;
  result.n = n;
  result.family = family;
  result.schema = schema;

  const std::vector<Slice> slices = make_slices(n, direct);
  if (workers <= 1) {
    for (const Slice& slice : slices) {
      run_slice(n, family, slice,
                [&](const PartialInjection& alpha) { fold(result, alpha); });
    }
    return result;
  }

  std::atomic<std::size_t> next_slice{0};
  std::mutex merge_mutex;
  auto work = [&]() {
    CountTable local;
    local.n = n;
    local.family = family;
    local.schema = schema;
    for (;;) {
      const std::size_t index = next_slice.fetch_add(1);
      if (index >= slices.size()) break;
      run_slice(n, family, slices[index],
                [&](const PartialInjection& alpha) { fold(local, alpha); });
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    result.merge(local);
  };
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  for (int i = 0; i < workers; ++i) threads.emplace_back(work);
  for (std::thread& t : threads) t.join();
  return result;
}

bool use_direct(Family family, CountMethod method) {
  switch (method) {
    case CountMethod::filtered:
      return false;
    case CountMethod::direct:
      if (!direct_supported(family)) {
        throw std::invalid_argument(
            "direct enumeration supports oci, oci-plus, orci, odci only");
      }
      return true;
    case CountMethod::auto_select:
      return direct_supported(family);
  }
  return false;
}

}  // namespace

void enumerate_filtered(int n, Family family, const MapVisitor& visit,
                        bool allow_large) {
  check_n(n);
  check_filtered_guard(n, allow_large);
  for (int first = 0; first <= n; ++first) {
    filtered_slice(n, family, first, visit);
  }
}

void enumerate_direct(int n, Family family, const MapVisitor& visit,
                      bool allow_large) {
  check_n(n);
  if (!direct_supported(family)) {
    throw std::invalid_argument(
        "direct enumeration supports oci, oci-plus, orci, odci only");
  }
  check_direct_guard(n, allow_large);
  direct_slice(n, family, 0, 0, visit);
  for (int p = 1; p <= n; ++p) {
    for (int first = 1; first + p - 1 <= n; ++first) {
      direct_slice(n, family, p, first, visit);
    }
  }
}

std::vector<PartialInjection> collect_filtered(int n, Family family,
                                               bool allow_large) {
  std::vector<PartialInjection> maps;
  enumerate_filtered(
      n, family, [&](const PartialInjection& alpha) { maps.push_back(alpha); },
      allow_large);
  return maps;
}

std::vector<PartialInjection> collect_direct(int n, Family family,
                                             bool allow_large) {
  std::vector<PartialInjection> maps;
  enumerate_direct(
      n, family, [&](const PartialInjection& alpha) { maps.push_back(alpha); },
      allow_large);
  return maps;
}

CountTable count_by_height(int n, Family family, CountMethod method,
                           int workers, bool allow_large) {
  check_n(n);
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  const bool direct = use_direct(family, method);
  if (direct) {
    check_direct_guard(n, allow_large);
  } else {
    check_filtered_guard(n, allow_large);
  }
  return parallel_count(n, family, direct, workers, TableSchema::by_height,
                        [](CountTable& table, const PartialInjection& alpha) {
                          table.add({alpha.height()});
                        });
}

CountTable count_by_height_fix(int n, Family family, CountMethod method,
                               int workers, bool allow_large) {
  check_n(n);
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  const bool direct = use_direct(family, method);
  if (direct) {
    check_direct_guard(n, allow_large);
  } else {
    check_filtered_guard(n, allow_large);
  }
  return parallel_count(n, family, direct, workers, TableSchema::by_height_fix,
                        [](CountTable& table, const PartialInjection& alpha) {
                          int fixed = 0;
                          for (const auto& [x, y] : alpha.pairs()) {
                            if (x == y) ++fixed;
                          }
                          table.add({alpha.height(), fixed});
                        });
}

BigCount count_with_image(int n, const std::vector<int>& image) {
  check_n(n);
  if (image.empty()) {
    throw std::invalid_argument("image tuple must have length >= 1");
  }
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] < 1 || image[i] > n) {
      throw std::invalid_argument("image point outside [1, n]");
    }
    if (i > 0 && image[i] <= image[i - 1]) {
      throw std::invalid_argument("image tuple must be strictly increasing");
    }
  }
  check_direct_guard(n, false);

  // Walk the domain p-subsets; the order-preserving pairing with the given
  // image is unique, so count those that are contractions (pairwise check).
  const int p = static_cast<int>(image.size());
  BigCount count = 0;
  std::vector<int> domain;
  auto recurse = [&](auto&& self, int next) -> void {
    if (static_cast<int>(domain.size()) == p) {
      Pairs pairs;
      for (int i = 0; i < p; ++i) pairs.emplace_back(domain[i], image[i]);
      if (is_contraction(PartialInjection(n, std::move(pairs)))) ++count;
      return;
    }
    const int left = p - static_cast<int>(domain.size());
    for (int a = next; a + left - 1 <= n; ++a) {
      domain.push_back(a);
      self(self, a + 1);
      domain.pop_back();
    }
  };
  recurse(recurse, 1);
  return count;
}

namespace {

void check_profile_bounds(int n, int k_minus, int k_plus, int l_plus, int p) {
  check_n(n);
  if (!(1 <= k_minus && k_minus <= k_plus && k_plus <= l_plus && l_plus <= n)) {
    throw std::invalid_argument("profile needs 1 <= k- <= k+ <= l+ <= n");
  }
  if (p < 1) throw std::invalid_argument("profile needs p >= 1");
}

}  // namespace

BigCount count_odci_profile(int n, int k_minus, int k_plus, int l_plus, int p) {
  check_profile_bounds(n, k_minus, k_plus, l_plus, p);
  check_direct_guard(n, false);
  BigCount count = 0;
  enumerate_direct(n, Family::ODCI, [&](const PartialInjection& alpha) {
    const StatProfile s = stat_profile(alpha);
    if (s.height == p && s.left_waist == k_minus && s.right_waist == k_plus &&
        s.right_shoulder == l_plus) {
      ++count;
    }
  });
  return count;
}

BigCount count_odci_profile_fix(int n, int k_minus, int k_plus, int l_plus,
                                int m, int p) {
  check_profile_bounds(n, k_minus, k_plus, l_plus, p);
  if (m < 0) throw std::invalid_argument("profile needs m >= 0");
  check_direct_guard(n, false);
  BigCount count = 0;
  enumerate_direct(n, Family::ODCI, [&](const PartialInjection& alpha) {
    const StatProfile s = stat_profile(alpha);
    if (s.height == p && s.fix == m && s.left_waist == k_minus &&
        s.right_waist == k_plus && s.right_shoulder == l_plus) {
      ++count;
    }
  });
  return count;
}

CountTable count_odci_profiles(int n) {
  check_n(n);
  check_direct_guard(n, false);
  CountTable table;
  table.n = n;
  table.family = Family::ODCI;
  table.schema = TableSchema::odci_profile;
  enumerate_direct(n, Family::ODCI, [&](const PartialInjection& alpha) {
    if (alpha.empty()) return;  // no waists or shoulders to key on
    const StatProfile s = stat_profile(alpha);
    table.add({*s.left_waist, *s.right_waist, *s.right_shoulder, s.height});
  });
  return table;
}

CountTable count_odci_profiles_fix(int n) {
  check_n(n);
  check_direct_guard(n, false);
  CountTable table;
  table.n = n;
  table.family = Family::ODCI;
  table.schema = TableSchema::odci_profile_fix;
  enumerate_direct(n, Family::ODCI, [&](const PartialInjection& alpha) {
    if (alpha.empty()) return;
    const StatProfile s = stat_profile(alpha);
    table.add(
        {*s.left_waist, *s.right_waist, *s.right_shoulder, s.fix, s.height});
  });
  return table;
}

}  // namespace contractions
