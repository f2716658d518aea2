#include "contractions/formulas.hpp"

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace contractions {

namespace {

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

// Dominated-chain pairs: strictly increasing k-tuples u in [1..X] and
// v in [1..Y] with v_1 <= u_1 and the gaps of v bounded by the gaps of u.
// For Y >= X the Y-bound is inactive and the count collapses to C(X+k, 2k);
// otherwise sum over the dominated chain's maximum w.
BigCount dominated_chain_pairs(int chain_x, int chain_y, int k) {
  if (k == 0) return 1;
  if (chain_y >= chain_x) return binom(chain_x + k, 2 * k);
  BigCount total = 0;
  for (int w = k; w <= chain_y; ++w) {
    total += binom(w - 1, k - 1) * binom(chain_x - w + k, k);
  }
  return total;
}

}  // namespace

BigCount binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result is a running binomial
  }
  return result;
}

BigCount fibonacci(long long k) {
  if (k < 0) throw std::invalid_argument("fibonacci index must be >= 0");
  static std::mutex mutex;
  static std::vector<BigCount> table = {0, 1};
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<long long>(table.size()) <= k) {
    table.push_back(table[table.size() - 1] + table[table.size() - 2]);
  }
  return table[static_cast<std::size_t>(k)];
}

BigCount compositions_positive(long long n, long long p) {
  return binom(n - 1, p - 1);
}

BigCount compositions_nonneg(long long n, long long p) {
  return binom(n + p - 1, p - 1);
}

BigCount oci_height_count(int n, int p) {
  require(n >= 1 && p >= 1 && p <= n, "oci_height_count needs 1 <= p <= n");
  const BigCount value =
      n * binom(n + p - 1, 2 * p - 1) + (1 - p) * binom(n + p, 2 * p);
  if (value < 0) {
    throw std::logic_error("oci_height_count produced a negative value");
  }
  return value;
}

BigCount oci_height_fix_count(int n, int p, int m) {
  require(n >= 0 && m >= 0 && m <= p && p <= n,
          "oci_height_fix_count needs 0 <= m <= p <= n");
  if (m == p) return binom(n, m);
  return (p - m - 1) * binom(n + p - m - 2, 2 * p - m) +
         2 * binom(n + p - m - 1, 2 * p - m);
}

BigCount oci_image_class_count(int n, int p, int q) {
  require(p >= 1 && p <= n, "oci_image_class_count needs 1 <= p <= n");
  require(q >= p - 1 && q <= n - 1,
          "oci_image_class_count needs p-1 <= q <= n-1");
  return binom(n - q + p - 1, p);
}

BigCount odci_height_count(int n, int p) {
  require(n >= 0 && p >= 0 && p <= n, "odci_height_count needs 0 <= p <= n");
  return binom(n + p, 2 * p);
}

BigCount odci_height_fix_count(int n, int p, int m) {
  require(n >= 0 && m >= 0 && m <= p && p <= n,
          "odci_height_fix_count needs 0 <= m <= p <= n");
  if (m == p) return binom(n, p);
  return binom(n + p - m - 1, 2 * p - m);
}

BigCount odci_profile_count(int n, int k_minus, int k_plus, int l_plus, int p) {
  require(1 <= k_minus && k_minus <= k_plus && k_plus <= l_plus && l_plus <= n,
          "odci_profile_count needs 1 <= k- <= k+ <= l+ <= n");
  require(p >= 1, "odci_profile_count needs p >= 1");
  return binom(l_plus - k_plus + p - 1, p - 1) *
         binom(k_plus - k_minus - 1, p - 2);
}

BigCount odci_profile_fix_count(int n, int k_minus, int k_plus, int l_plus,
                                int m, int p) {
  require(1 <= k_minus && k_minus <= k_plus && k_plus <= l_plus && l_plus <= n,
          "odci_profile_fix_count needs 1 <= k- <= k+ <= l+ <= n");
  require(p >= 1 && m >= 0 && m < p, "odci_profile_fix_count needs 0 <= m < p");
  return binom(l_plus - k_plus + p - m - 2, p - m - 1) *
         binom(k_plus - k_minus - 1, p - 2);
}

BigCount orci_height_count(int n, int p) {
  require(n >= 1 && p >= 1 && p <= n, "orci_height_count needs 1 <= p <= n");
  if (p == 1) return BigCount(n) * n;
  const BigCount value =
      2 * n * binom(n + p - 1, 2 * p - 1) + (2 - 2 * p) * binom(n + p, 2 * p);
  if (value < 0) {
    throw std::logic_error("orci_height_count produced a negative value");
  }
  return value;
}

BigCount ociplus_height_fix_count(int n, int p, int m) {
  require(n >= 0 && m >= 0 && m <= p && p <= n,
          "ociplus_height_fix_count needs 0 <= m <= p <= n");
  if (p == 0) return 1;  // the empty map, m = 0
  if (p == 1) {
    // Singletons are order-reversing; n of them are partial identities.
    if (m == 1) return n;
    return BigCount(n) * n - n;
  }
  // A reversing map of height >= 2: b_i - a_i is strictly decreasing, so it
  // has at most one fixed point.
  if (m >= 2) return 0;
  BigCount fixed_one = 0;
  for (int c = 1; c <= n; ++c) {
    for (int k = 0; k <= p - 1; ++k) {
      fixed_one += dominated_chain_pairs(c - 1, n - c, k) *
                   dominated_chain_pairs(n - c, c - 1, p - 1 - k);
    }
  }
  if (m == 1) return fixed_one;
  return oci_height_count(n, p) - fixed_one;  // |OCI+| at height p is |OCI|
}

BigCount orci_height_fix_count(int n, int p, int m) {
  require(n >= 0 && m >= 0 && m <= p && p <= n,
          "orci_height_fix_count needs 0 <= m <= p <= n");
  if (m == p) return binom(n, m);
  if (m == 1 && p == 1) return n;
  if (m == 1) {
    return oci_height_fix_count(n, p, 1) + ociplus_height_fix_count(n, p, 1);
  }
  if (m >= 2) return oci_height_fix_count(n, p, m);
  // m == 0, p >= 1
  BigCount value = orci_height_count(n, p);
  for (int mm = 1; mm <= p; ++mm) value -= orci_height_fix_count(n, p, mm);
  if (value < 0) {
    throw std::logic_error("orci_height_fix_count produced a negative value");
  }
  return value;
}

BigCount orci_height_fix_count_uncorrected(int n, int p, int m) {
  require(n >= 1 && m >= 1 && m <= p && p <= n,
          "orci_height_fix_count_uncorrected covers 1 <= m <= p <= n only");
  if (m == p) return binom(n, m);
  if (m == 1) {
    return 2 * (p - 2) * binom(n + p - 3, 2 * p - 1) +
           4 * binom(n + p - 2, 2 * p - 1) - n;
  }
  return (p - m - 1) * binom(n + p - m - 2, 2 * p - m) +
         2 * binom(n + p - m - 1, 2 * p - m);
}

namespace {

// Exact division by 5 of a combined Fibonacci expression.
BigCount exact_fifth(const BigCount& value, const char* what) {
  if (value % 5 != 0) {
    throw std::logic_error(std::string(what) + ": expression not divisible by 5");
  }
  return value / 5;
}

}  // namespace

BigCount order_oci(int n, OrderMethod method) {
  require(n >= 0, "order_oci needs n >= 0");
  switch (method) {
    case OrderMethod::closed: {
      const BigCount combined =
          (3 * BigCount(n) - 1) * fibonacci(2LL * n) -
          (BigCount(n) - 5) * fibonacci(2LL * n + 1);
      return exact_fifth(combined, "order_oci");
    }
    case OrderMethod::recurrence: {
      // h_n = 6 h_{n-1} - 11 h_{n-2} + 6 h_{n-3} - h_{n-4}
      BigCount h[4] = {1, 2, 6, 18};
      if (n < 4) return h[n];
      for (int i = 4; i <= n; ++i) {
        BigCount next = 6 * h[3] - 11 * h[2] + 6 * h[1] - h[0];
        h[0] = h[1];
        h[1] = h[2];
        h[2] = h[3];
        h[3] = next;
      }
      return h[3];
    }
    case OrderMethod::summation: {
      BigCount sum = 1;  // the empty map
      for (int p = 1; p <= n; ++p) sum += oci_height_count(n, p);
      return sum;
    }
  }
  throw std::invalid_argument("unknown order method");
}

BigCount order_odci(int n) {
  require(n >= 0, "order_odci needs n >= 0");
  return fibonacci(2LL * n + 1);
}

BigCount order_orci(int n) {
  require(n >= 0, "order_orci needs n >= 0");
  const BigCount combined =
      (6 * BigCount(n) - 2) * fibonacci(2LL * n) -
      (2 * BigCount(n) - 10) * fibonacci(2LL * n + 1);
  return exact_fifth(combined, "order_orci") - 1 - BigCount(n) * n;
}

BigCount fib_identity_odd(int n) {
  require(n >= 0, "fib_identity_odd needs n >= 0");
  BigCount sum = 0;
  for (int p = 0; p <= n; ++p) sum += binom(n + p, 2 * p);
  return sum;
}

BigCount fib_identity_even(int n) {
  require(n >= 0, "fib_identity_even needs n >= 0");
  BigCount sum = 0;
  for (int p = 0; p <= n; ++p) sum += binom(n + p - 1, 2 * p - 1);
  return sum;
}

}  // namespace contractions
