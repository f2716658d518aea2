#ifndef CONTRACTIONS_FORMULAS_HPP_
#define CONTRACTIONS_FORMULAS_HPP_

#include "contractions/big_count.hpp"

namespace contractions {

/// Binomial coefficient with the zero convention applied in this one place:
/// C(n,k) = 0 if k > n or if k or n is negative. Every formula below goes
/// through here; none re-implements bound checks.
BigCount binom(long long n, long long k);

/// F_0 = 0, F_1 = 1, F_k = F_{k-1} + F_{k-2}. Memoized; exact for any k.
BigCount fibonacci(long long k);

/// Compositions of n into p positive parts: C(n-1, p-1).
BigCount compositions_positive(long long n, long long p);
/// Compositions of n into p non-negative parts: C(n+p-1, p-1).
BigCount compositions_nonneg(long long n, long long p);

/// OCI_n maps of height p >= 1:  n*C(n+p-1, 2p-1) + (1-p)*C(n+p, 2p).
/// Signed terms are combined exactly; throws std::logic_error if the result
/// would be negative (formula misuse).
BigCount oci_height_count(int n, int p);

/// OCI_n maps of height p with m fixed points:
///   m = p: C(n, m)
///   m < p: (p-m-1)*C(n+p-m-2, 2p-m) + 2*C(n+p-m-1, 2p-m).
BigCount oci_height_fix_count(int n, int p, int m);

/// OCI_n maps whose image has length p and gap sum q: C(n-q+p-1, p).
/// Requires 1 <= p <= n and p-1 <= q <= n-1.
BigCount oci_image_class_count(int n, int p, int q);

/// ODCI_n maps of height p: C(n+p, 2p). Defined for p = 0 (empty map).
BigCount odci_height_count(int n, int p);

/// ODCI_n maps of height p with m fixed points:
///   m = p: C(n, p);  m < p: C(n+p-m-1, 2p-m).
BigCount odci_height_fix_count(int n, int p, int m);

/// ODCI_n maps with left waist k-, right waist k+, right shoulder l+ and
/// height p:  C(l+ - k+ + p-1, p-1) * C(k+ - k- - 1, p-2).
/// Valid for p >= 2; at p = 1 the convention sends the product to 0 while
/// enumeration gives 1 when k- = k+ <= l+ (see the verification suite note).
BigCount odci_profile_count(int n, int k_minus, int k_plus, int l_plus, int p);

/// Fixed-point refinement (m < p):
///   C(l+ - k+ + p-m-2, p-m-1) * C(k+ - k- - 1, p-2).
BigCount odci_profile_fix_count(int n, int k_minus, int k_plus, int l_plus,
                                int m, int p);

/// ORCI_n maps of height p: n^2 at p = 1, else
/// 2n*C(n+p-1, 2p-1) + (2-2p)*C(n+p, 2p).
BigCount orci_height_count(int n, int p);

/// Order-reversing contractions (OCI+_n) of height p with m fixed points.
/// A reversing map of height >= 2 has at most one fixed point; the m = 1
/// count splits at the unique fixed point c into two dominated-chain pairs:
///   R(n,p) = sum_c sum_{k+l=p-1} G(c-1, n-c, k) * G(n-c, c-1, l),
///   G(X,Y,k) = C(X+k, 2k) if Y >= X, else
///              sum_{w=k}^{Y} C(w-1, k-1) * C(X-w+k, k).
BigCount ociplus_height_fix_count(int n, int p, int m);

/// ORCI_n maps of height p with m fixed points, enumeration-verified:
///   m = p:          C(n, m)
///   m = 1, p = 1:   n
///   m = 1, p >= 2:  oci_height_fix_count(n,p,1) + ociplus_height_fix_count(n,p,1)
///   2 <= m < p:     oci_height_fix_count(n,p,m)
///   m = 0:          orci_height_count(n,p) - sum over m >= 1.
BigCount orci_height_fix_count(int n, int p, int m);

/// Uncorrected closed form for the ORCI m = 1 < p case,
///   2(p-2)*C(n+p-3, 2p-1) + 4*C(n+p-2, 2p-1) - n,
/// kept so the verification report can document where it disagrees with
/// enumeration (the -n term only makes sense at p = 1, where the n partial
/// identities of height one would otherwise be counted twice). May return a
/// negative value; treat the output as a formula evaluation, not a count.
/// m = p and 1 < m < p follow the same published statement; m = 0 is not
/// covered and throws std::invalid_argument.
BigCount orci_height_fix_count_uncorrected(int n, int p, int m);

enum class OrderMethod { closed, recurrence, summation };

/// |OCI_n| by three independent routes that must agree:
///   closed:     ((3n-1)*F_{2n} - (n-5)*F_{2n+1}) / 5, with the division
///               performed on the combined integer and checked exact;
///   recurrence: h_n = 6h_{n-1} - 11h_{n-2} + 6h_{n-3} - h_{n-4},
///               h_0..h_3 = 1, 2, 6, 18;
///   summation:  1 + sum_{p=1}^{n} oci_height_count(n, p).
BigCount order_oci(int n, OrderMethod method = OrderMethod::closed);

/// |ODCI_n| = F_{2n+1}.
BigCount order_odci(int n);

/// |ORCI_n| = ((6n-2)*F_{2n} - (2n-10)*F_{2n+1}) / 5 - 1 - n^2, division
/// checked exact; equals 2*order_oci(n) - 1 - n^2.
BigCount order_orci(int n);

/// sum_{p>=0} C(n+p, 2p)   (= F_{2n+1}).
BigCount fib_identity_odd(int n);
/// sum_{p>=0} C(n+p-1, 2p-1)   (= F_{2n}).
BigCount fib_identity_even(int n);

}  // namespace contractions

#endif  // CONTRACTIONS_FORMULAS_HPP_
