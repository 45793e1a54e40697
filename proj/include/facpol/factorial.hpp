#pragma once

#include <facpol/polynomial.hpp>

namespace facpol::fac {

/// Potential polynomial P(n,k) = sum_{j=0}^n falling(k,j) X0^(k-j) B(n,j).
/// k may be negative; X0 then occurs with negative exponents.
Polynomial potential(int n, long k);

/// Lower factorial polynomial, built directly from the derivatives of the
/// falling factorial power of order k expanded in the monomial basis.
Polynomial lower_factorial_direct(int n, int k);

/// Upper factorial polynomial, built directly from the derivatives of the
/// rising factorial power of order k.
Polynomial upper_factorial_direct(int n, int k);

/// Lower factorial polynomial as sum_r s1(k,r) P(n,r).
Polynomial lower_from_potential(int n, int k);

/// Upper factorial polynomial as sum_r c(k,r) P(n,r).
Polynomial upper_from_potential(int n, int k);

/// P(n,k) recovered as sum_r s2(k,r) * lower(n,r).
Polynomial potential_from_lower(int n, int k);

/// Upper from lower via signed Lah numbers: sum_j (-1)^k l(k,j) lower(n,j).
Polynomial upper_from_lower(int n, int k);

/// Lower from upper via signed Lah numbers: sum_j (-1)^j l(k,j) upper(n,j).
Polynomial lower_from_upper(int n, int k);

/// Memoized fast paths (values equal the *_direct constructions).
const Polynomial& lower_factorial(int n, int k);
const Polynomial& upper_factorial(int n, int k);

} // namespace facpol::fac
