#include "contractions/family.hpp"

namespace contractions {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::I: return "i";
    case Family::CI: return "ci";
    case Family::OCI: return "oci";
    case Family::OCIPlus: return "oci-plus";
    case Family::ORCI: return "orci";
    case Family::ODCI: return "odci";
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family family : kAllFamilies) {
    if (name == family_name(family)) return family;
  }
  return std::nullopt;
}

bool in_family(const PartialInjection& alpha, Family family) {
  switch (family) {
    case Family::I:
      return true;
    case Family::CI:
      return is_contraction(alpha);
    case Family::OCI:
      return is_contraction(alpha) && is_order_preserving(alpha);
    case Family::OCIPlus:
      return is_contraction(alpha) && is_order_reversing(alpha);
    case Family::ORCI:
      return is_contraction(alpha) &&
             (is_order_preserving(alpha) || is_order_reversing(alpha));
    case Family::ODCI:
      return is_contraction(alpha) && is_order_preserving(alpha) &&
             is_order_decreasing(alpha);
  }
  return false;
}

}  // namespace contractions
