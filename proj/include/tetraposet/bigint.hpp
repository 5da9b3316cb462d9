#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tetraposet {

// Exact arbitrary-precision integer used for all counts and coefficients.
using Int = boost::multiprecision::cpp_int;

}  // namespace tetraposet
