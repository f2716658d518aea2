#ifndef CONTRACTIONS_BIG_COUNT_HPP_
#define CONTRACTIONS_BIG_COUNT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

namespace contractions {

// Exact arithmetic everywhere; no floating point is used for any count.
using BigCount = boost::multiprecision::cpp_int;

}  // namespace contractions

#endif  // CONTRACTIONS_BIG_COUNT_HPP_
