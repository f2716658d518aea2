#ifndef CONTRACTIONS_DUAL_HPP_
#define CONTRACTIONS_DUAL_HPP_

#include "contractions/partial_injection.hpp"

namespace contractions {

/// Order-reversing duality OCI_n -> OCI+_n. Maps of height <= 1 are their
/// own image (they lie in the overlap). For height >= 2 the result has
/// domain a_1, a_1+t_{p-1}, ..., a_1+t_{p-1}+...+t_1 and image
/// a_pα, a_pα-d_{p-1}, ..., a_pα-d_{p-1}-...-d_1, so the domain gap tuple is
/// reversed and the image gap tuple is negated-reversed. Throws
/// std::invalid_argument if the input is not in OCI_n.
PartialInjection theta(const PartialInjection& alpha);

/// Explicit inverse construction (mirror of theta, not a search); identity on
/// height <= 1. Throws std::invalid_argument if the input is not in OCI+_n.
PartialInjection theta_inverse(const PartialInjection& beta);

}  // namespace contractions

#endif  // CONTRACTIONS_DUAL_HPP_
