#include <facpol/factorial.hpp>

#include <facpol/bell.hpp>
#include <facpol/combinat.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

namespace facpol::fac {

using combinat::cycle;
using combinat::falling;
using combinat::stirling1_signed;
using combinat::stirling2;

namespace {

void require_nonneg(const char* who, int n, int k) {
  if (n < 0 || k < 0) throw std::domain_error(std::string(who) + ": indices must be non-negative");
}

// sum_{j=0}^n D^j(f)(X0) B(n,j) for f given in the monomial basis as
// coefficients coeff[r] of x^r. D^j(x^r) = falling(r,j) x^(r-j), so the
// substituted factor is sum_r coeff[r] falling(r,j) X0^(r-j).
Polynomial faa_di_bruno_poly(const std::vector<Int>& coeff, int n) {
  Polynomial out;
  for (int j = 0; j <= n; ++j) {
    Polynomial deriv_at_x0;
    for (int r = j; r < static_cast<int>(coeff.size()); ++r) {
      Int c = coeff[r] * falling(Int(r), j);
      if (c != 0) deriv_at_x0 += Polynomial(c, Monomial::var(0, r - j));
    }
    if (!deriv_at_x0.is_zero()) out += deriv_at_x0 * bell::bell(n, j);
  }
  return out;
}

} // namespace

Polynomial potential(int n, long k) {
  if (n < 0) throw std::domain_error("potential: n must be non-negative");
  Polynomial out;
  for (int j = 0; j <= n; ++j) {
    Int f = falling(Int(k), j);
    if (f == 0) continue;
    out += bell::bell(n, j).times_monomial(Monomial::var(0, static_cast<int>(k) - j), f);
  }
  return out;
}

Polynomial lower_factorial_direct(int n, int k) {
  require_nonneg("lower_factorial_direct", n, k);
  std::vector<Int> coeff(k + 1);
  for (int r = 0; r <= k; ++r) coeff[r] = stirling1_signed(k, r);
  return faa_di_bruno_poly(coeff, n);
}

Polynomial upper_factorial_direct(int n, int k) {
  require_nonneg("upper_factorial_direct", n, k);
  std::vector<Int> coeff(k + 1);
  for (int r = 0; r <= k; ++r) coeff[r] = cycle(k, r);
  return faa_di_bruno_poly(coeff, n);
}

Polynomial lower_from_potential(int n, int k) {
  require_nonneg("lower_from_potential", n, k);
  Polynomial out;
  for (int r = 0; r <= k; ++r) out += potential(n, r).scaled(stirling1_signed(k, r));
  return out;
}

Polynomial upper_from_potential(int n, int k) {
  require_nonneg("upper_from_potential", n, k);
  Polynomial out;
  for (int r = 0; r <= k; ++r) out += potential(n, r).scaled(cycle(k, r));
  return out;
}

Polynomial potential_from_lower(int n, int k) {
  require_nonneg("potential_from_lower", n, k);
  Polynomial out;
  for (int r = 0; r <= k; ++r) out += lower_factorial(n, r).scaled(stirling2(k, r));
  return out;
}

Polynomial upper_from_lower(int n, int k) {
  require_nonneg("upper_from_lower", n, k);
  Polynomial out;
  for (int j = 0; j <= k; ++j) {
    Int c = combinat::lah_signed(k, j);
    if (k % 2 != 0) c = -c;
    out += lower_factorial(n, j).scaled(c);
  }
  return out;
}

Polynomial lower_from_upper(int n, int k) {
  require_nonneg("lower_from_upper", n, k);
  Polynomial out;
  for (int j = 0; j <= k; ++j) {
    Int c = combinat::lah_signed(k, j);
    if (j % 2 != 0) c = -c;
    out += upper_factorial(n, j).scaled(c);
  }
  return out;
}

namespace {

const Polynomial& cached(std::map<std::pair<int, int>, Polynomial>& cache, std::mutex& mutex,
                         int n, int k, Polynomial (*build)(int, int)) {
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({n, k});
  if (it == cache.end()) it = cache.emplace(std::make_pair(n, k), build(n, k)).first;
  return it->second;
}

} // namespace

const Polynomial& lower_factorial(int n, int k) {
  static std::map<std::pair<int, int>, Polynomial> cache;
  static std::mutex mutex;
  return cached(cache, mutex, n, k, &lower_factorial_direct);
}

const Polynomial& upper_factorial(int n, int k) {
  static std::map<std::pair<int, int>, Polynomial> cache;
  static std::mutex mutex;
  return cached(cache, mutex, n, k, &upper_factorial_direct);
}

} // namespace facpol::fac
