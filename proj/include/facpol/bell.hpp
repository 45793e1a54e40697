#pragma once

#include <facpol/polynomial.hpp>

#include <vector>

namespace facpol::bell {

/// B(n,k) by direct enumeration of all multiplicity sequences r1,r2,... >= 0
/// with sum(r_j) = k and sum(j r_j) = n; each term carries the multinomial
/// coefficient n!/(r1! r2! ... (1!)^r1 (2!)^r2 ...), asserted to divide
/// exactly. This is the reference oracle for bell().
Polynomial bell_bruteforce(int n, int k);

/// B(n,k) via the convolution recurrence
///   B(n,k) = sum_{j=1}^{n-k+1} C(n-1,j-1) Xj B(n-j,k-1),
/// memoized; agrees with bell_bruteforce on all indices.
Polynomial bell_recurrence(int n, int k);

/// Memoized fast path (same values as bell_recurrence).
const Polynomial& bell(int n, int k);

/// Lower-triangular table of the matrix inverse A(n,k) of the B(n,k),
/// Laurent in X1. Built row-wise by the triangular solve
///   A(n,n) = X1^-n,  A(n,k) = -(sum_{j=k+1}^n A(n,j) B(j,k)) X1^-k.
class ATable {
 public:
  explicit ATable(int nmax);

  int nmax() const { return nmax_; }

  /// A(n,k) for 1 <= k <= n <= nmax; A(n,0) = delta(n,0).
  const Polynomial& at(int n, int k) const;

 private:
  int nmax_;
  std::vector<std::vector<Polynomial>> rows_;
};

} // namespace facpol::bell
