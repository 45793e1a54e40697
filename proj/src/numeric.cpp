#include <facpol/numeric.hpp>

#include <stdexcept>

namespace facpol {

Int int_pow(const Int& x, long e) {
  if (e < 0) throw std::domain_error("int_pow: negative exponent");
  Int r = 1, b = x;
  for (long n = e; n > 0; n >>= 1) {
    if (n & 1) r *= b;
    if (n > 1) b *= b;
  }
  return r;
}

Rat rat_pow(const Rat& x, long e) {
  if (e == 0) return Rat(1);
  if (e < 0) {
    if (x == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    return rat_pow(Rat(1) / x, -e);
  }
  Rat r = 1, b = x;
  for (long n = e; n > 0; n >>= 1) {
    if (n & 1) r *= b;
    if (n > 1) b *= b;
  }
  return r;
}

} // namespace facpol
