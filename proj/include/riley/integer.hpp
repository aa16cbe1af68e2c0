#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace riley {

// Exact arbitrary-precision integer.  Word-polynomial coefficients grow
// without bound under composition, so fixed-width types are not an option.
using Integer = boost::multiprecision::cpp_int;

}  // namespace riley
