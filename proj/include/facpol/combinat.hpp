#pragma once

#include <facpol/numeric.hpp>

namespace facpol::combinat {

/// Tags for the integer number families available as triangular tables.
enum class NumberFamilyId {
  Stirling1Signed,
  Stirling2,
  Cycle,
  LahSigned,
  LahUnsigned,
};

Int factorial(long n);

/// C(n,k); 0 outside 0 <= k <= n. Rejects n < 0.
Int binomial(long n, long k);

/// Falling factorial power x(x-1)...(x-j+1); 1 for j = 0. Rejects j < 0.
Int falling(const Int& x, long j);

/// Rising factorial power x(x+1)...(x+j-1); 1 for j = 0. Rejects j < 0.
Int rising(const Int& x, long j);

/// Stirling numbers of the second kind S(n,k) (subset numbers).
Int stirling2(long n, long k);

/// Signed Stirling numbers of the first kind, s1(n,k) = coefficient of x^k
/// in x(x-1)...(x-n+1).
Int stirling1_signed(long n, long k);

/// Cycle numbers c(n,k) = |s1(n,k)| = (-1)^(n-k) s1(n,k).
Int cycle(long n, long k);

/// Signed Lah numbers l(n,k) = (-1)^n (n!/k!) C(n-1,k-1), l(0,0) = 1.
Int lah_signed(long n, long k);

Int lah_unsigned(long n, long k);

Int number(NumberFamilyId id, long n, long k);

} // namespace facpol::combinat
