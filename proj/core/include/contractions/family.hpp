#ifndef CONTRACTIONS_FAMILY_HPP_
#define CONTRACTIONS_FAMILY_HPP_

#include <array>
#include <optional>
#include <string_view>

#include "contractions/partial_injection.hpp"

namespace contractions {

/// The six map families on the chain:
///   I       all partial injective maps
///   CI      contractions
///   OCI     order-preserving contractions
///   OCIPlus order-reversing contractions
///   ORCI    order-preserving or order-reversing contractions
///   ODCI    order-preserving and order-decreasing contractions
enum class Family { I, CI, OCI, OCIPlus, ORCI, ODCI };

inline constexpr std::array<Family, 6> kAllFamilies = {
    Family::I,    Family::CI,   Family::OCI,
    Family::OCIPlus, Family::ORCI, Family::ODCI};

std::string_view family_name(Family family);  // "i", "ci", "oci", "oci-plus", "orci", "odci"
std::optional<Family> parse_family(std::string_view name);

/// Membership by the defining predicates (pairwise route). The empty map and
/// all height-1 maps belong to every family.
bool in_family(const PartialInjection& alpha, Family family);

}  // namespace contractions

#endif  // CONTRACTIONS_FAMILY_HPP_
