#include <facpol/numfam.hpp>

#include <facpol/combinat.hpp>

#include <algorithm>
#include <stdexcept>

namespace facpol::numfam {

using combinat::binomial;
using combinat::cycle;
using combinat::factorial;
using combinat::stirling1_signed;
using combinat::stirling2;

namespace {

void require_exponent(long n) {
  if (n < 1) throw std::domain_error("exponent n must be >= 1");
}

} // namespace

Int WeightScheme::weight(long k, long r) const {
  if (r < 1 || r > k) throw std::domain_error("WeightScheme: r out of range");
  return std::visit(
      [&](auto&& w) -> Int {
        using T = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<T, Ones>) return 1;
        if constexpr (std::is_same_v<T, Cycle>) return cycle(k, r);
        if constexpr (std::is_same_v<T, Stirling1Signed>) return stirling1_signed(k, r);
        if constexpr (std::is_same_v<T, Custom>) {
          if (static_cast<long>(w.weights.size()) != k)
            throw std::invalid_argument("WeightScheme: custom weights must have length k");
          return w.weights[r - 1];
        }
      },
      tag);
}

Int upper_assoc(long n, long k) {
  require_exponent(n);
  if (k < 0) throw std::domain_error("upper_assoc: k must be >= 0");
  Int s = 0;
  for (long r = 1; r <= k; ++r) s += cycle(k, r) * int_pow(Int(r), n);
  return s;
}

Int lower_assoc(long n, long k) {
  require_exponent(n);
  if (k < 0) throw std::domain_error("lower_assoc: k must be >= 0");
  Int s = 0;
  for (long r = 1; r <= k; ++r) s += stirling1_signed(k, r) * int_pow(Int(r), n);
  return s;
}

Int power_sum_direct(const WeightScheme& scheme, long n, long k) {
  require_exponent(n);
  if (k < 1) throw std::domain_error("power_sum_direct: k must be >= 1");
  Int s = 0;
  for (long r = 1; r <= k; ++r) s += scheme.weight(k, r) * int_pow(Int(r), n);
  return s;
}

Int power_sum_reduce(const WeightScheme& scheme, long n, long k) {
  require_exponent(n);
  if (k < 1) throw std::domain_error("power_sum_reduce: k must be >= 1");
  Int s = 0;
  for (long j = 1; j <= std::min(k, n); ++j) {
    Int inner = 0;
    for (long r = j; r <= k; ++r) inner += binomial(r, j) * scheme.weight(k, r);
    s += factorial(j) * stirling2(n, j) * inner;
  }
  return s;
}

Int sum_rule_ones(long k, long j) {
  if (j < 1 || j > k) throw std::domain_error("sum_rule_ones: need 1 <= j <= k");
  return binomial(k + 1, j + 1);
}

Int prop42_rhs(long n, long k) {
  require_exponent(n);
  if (k < 1) throw std::domain_error("prop42_rhs: k must be >= 1");
  Int s = 0;
  for (long j = 1; j <= std::min(k, n); ++j)
    s += factorial(j) * stirling2(n, j) * cycle(k + 1, j + 1);
  return s;
}

Int prop44_rhs(long n, long k) {
  require_exponent(n);
  if (k < 1) throw std::domain_error("prop44_rhs: k must be >= 1");
  Int s = 0;
  for (long j = 1; j <= std::min(k, n); ++j) {
    Int term = factorial(j) * stirling2(n, j) * (cycle(k - 1, j - 1) - cycle(k - 1, j));
    s += ((k - j) % 2 != 0) ? -term : term;
  }
  return s;
}

Int prf1_lhs(long k, long j) {
  if (k < 1 || j < 0 || j > k - 1)
    throw std::domain_error("prf1_lhs: need k >= 1 and 0 <= j <= k-1");
  Int s = 0;
  for (long r = j + 1; r <= k; ++r) s += binomial(r, j) * stirling1_signed(k, r);
  return s;
}

std::vector<Int> closing_identity_coeffs(int n) {
  if (n < 1 || n > 3)
    throw std::domain_error("closing_identity_coeffs: n must be 1, 2 or 3");
  // Coefficient of c(k-1,m) in sum_r (-1)^r c(k,r) r^n, obtained by
  // folding (-1)^k into the prop44_rhs expansion:
  //   (-1)^(m+1) (m+1)! s2(n,m+1) - (-1)^m m! s2(n,m).
  std::vector<Int> coeffs;
  for (int m = 1; m <= n; ++m) {
    Int a = factorial(m + 1) * stirling2(n, m + 1);
    if ((m + 1) % 2 != 0) a = -a;
    Int b = factorial(m) * stirling2(n, m);
    if (m % 2 != 0) b = -b;
    coeffs.push_back(a - b);
  }
  return coeffs;
}

Int closing_n3_literal_k_minus_10_rhs(long k) {
  if (k < 2) throw std::domain_error("closing_n3_literal_k_minus_10_rhs: k must be >= 2");
  Int s = 7 * cycle(k - 1, 1) - 12 * cycle(k - 1, 2);
  if (k >= 10) s += 6 * cycle(k - 10, 3);
  return s;
}

} // namespace facpol::numfam
