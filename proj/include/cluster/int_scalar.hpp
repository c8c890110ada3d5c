#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cluster {

// Exact integer scalar for all symbolic coefficient arithmetic.
using Int = boost::multiprecision::cpp_int;

} // namespace cluster
