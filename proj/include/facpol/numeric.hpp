#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace facpol {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// x^e for integer e; e < 0 requires x != 0.
Rat rat_pow(const Rat& x, long e);

Int int_pow(const Int& x, long e);

} // namespace facpol
