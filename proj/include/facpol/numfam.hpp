#pragma once

#include <facpol/numeric.hpp>

#include <variant>
#include <vector>

namespace facpol::numfam {

/// Weight schemes gamma_{k,r} (1 <= r <= k) for the power-sum reduction.
struct WeightScheme {
  struct Ones {};
  struct Cycle {};
  struct Stirling1Signed {};
  struct Custom {
    std::vector<Int> weights; // gamma_{k,1} .. gamma_{k,k}
  };
  std::variant<Ones, Cycle, Stirling1Signed, Custom> tag;

  Int weight(long k, long r) const;
};

/// [n] upper-k: sum_r c(k,r) r^n (all-ones value of the upper factorial
/// polynomial). Requires n >= 1.
Int upper_assoc(long n, long k);

/// [n] lower-k: sum_r s1(k,r) r^n. Requires n >= 1.
Int lower_assoc(long n, long k);

/// Direct weighted power sum sum_{r=1}^k gamma_{k,r} r^n.
Int power_sum_direct(const WeightScheme& scheme, long n, long k);

/// The reduced form sum_{j=1}^{min(k,n)} j! s2(n,j) sum_{r=j}^k C(r,j) gamma_{k,r};
/// equals power_sum_direct for every scheme.
Int power_sum_reduce(const WeightScheme& scheme, long n, long k);

/// Upper summation rule for unit weights: sum_{r=j}^k C(r,j) = C(k+1,j+1).
Int sum_rule_ones(long k, long j);

/// Right-hand side of the reduction with cycle-number weights:
/// sum_j j! s2(n,j) c(k+1,j+1); equals upper_assoc(n,k).
Int prop42_rhs(long n, long k);

/// Right-hand side of the reduction with signed first-kind Stirling weights:
/// sum_j (-1)^(k-j) j! s2(n,j) (c(k-1,j-1) - c(k-1,j)); equals lower_assoc(n,k).
Int prop44_rhs(long n, long k);

/// Left-hand side of the upper summation lemma
/// sum_{r=j+1}^k C(r,j) s1(k,r); equals k * s1(k-1,j).
Int prf1_lhs(long k, long j);

/// Coefficients (of c(k-1,1), c(k-1,2), ...) expressing
/// sum_r (-1)^r c(k,r) r^n for n in {1,2,3}, derived from the prop44_rhs
/// expansion: (1), (3,-2), (7,-12,6).
std::vector<Int> closing_identity_coeffs(int n);

/// The same combination but reading the index as "k-10" instead of "k-1"
/// in the last term for n = 3; kept to demonstrate that this variant fails.
Int closing_n3_literal_k_minus_10_rhs(long k);

} // namespace facpol::numfam
