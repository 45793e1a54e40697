#include <facpol/bell.hpp>
#include <facpol/combinat.hpp>

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace facpol::bell {

namespace {

void require_indices(const char* who, int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw std::domain_error(std::string(who) + ": need 0 <= k <= n");
}

// Enumerates multiplicity vectors r1..rm (m = n-k+1) with sum r_j = k and
// sum j r_j = n, choosing r_j in decreasing order of j for a fixed,
// reproducible term order.
void enumerate(int j, int parts_left, int weight_left, std::vector<int>& mult,
               Polynomial& out, const Int& nfact) {
  if (j == 0) {
    if (parts_left != 0 || weight_left != 0) return;
    Int denom = 1;
    std::vector<std::pair<int, int>> exps;
    for (int i = 1; i < static_cast<int>(mult.size()); ++i) {
      int r = mult[i];
      if (r == 0) continue;
      denom *= combinat::factorial(r);
      denom *= int_pow(combinat::factorial(i), r);
      exps.emplace_back(i, r);
    }
    if (nfact % denom != 0)
      throw std::logic_error("bell_bruteforce: multinomial coefficient not integral");
    out += Polynomial(nfact / denom, Monomial::from_exponents(std::move(exps)));
    return;
  }
  int rmax = std::min(parts_left, weight_left / j);
  for (int r = rmax; r >= 0; --r) {
    mult[j] = r;
    enumerate(j - 1, parts_left - r, weight_left - j * r, mult, out, nfact);
    mult[j] = 0;
  }
}

} // namespace

Polynomial bell_bruteforce(int n, int k) {
  require_indices("bell_bruteforce", n, k);
  int m = n - k + 1;
  if (k == 0) return n == 0 ? Polynomial(Int(1)) : Polynomial::zero();
  Polynomial out;
  std::vector<int> mult(m + 1, 0);
  enumerate(m, k, n, mult, out, combinat::factorial(n));
  return out;
}

Polynomial bell_recurrence(int n, int k) {
  require_indices("bell_recurrence", n, k);
  if (k == 0) return n == 0 ? Polynomial(Int(1)) : Polynomial::zero();
  Polynomial out;
  for (int j = 1; j <= n - k + 1; ++j)
    out += bell(n - j, k - 1).times_monomial(Monomial::var(j), combinat::binomial(n - 1, j - 1));
  return out;
}

const Polynomial& bell(int n, int k) {
  require_indices("bell", n, k);
  static std::vector<std::vector<Polynomial>> rows;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  while (static_cast<int>(rows.size()) <= n) {
    int m = static_cast<int>(rows.size());
    std::vector<Polynomial> row(m + 1);
    if (m == 0) {
      row[0] = Polynomial(Int(1));
    } else {
      row[0] = Polynomial::zero();
      for (int kk = 1; kk <= m; ++kk) {
        Polynomial p;
        for (int j = 1; j <= m - kk + 1; ++j)
          p += rows[m - j][kk - 1].times_monomial(Monomial::var(j),
                                                  combinat::binomial(m - 1, j - 1));
        row[kk] = std::move(p);
      }
    }
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

ATable::ATable(int nmax) : nmax_(nmax) {
  if (nmax < 1) throw std::domain_error("ATable: nmax must be >= 1");
  rows_.resize(nmax + 1);
  rows_[0] = {Polynomial(Int(1))};
  for (int n = 1; n <= nmax; ++n) {
    auto& row = rows_[n];
    row.resize(n + 1);
    row[0] = Polynomial::zero();
    row[n] = Polynomial(Int(1), Monomial::var(1, -n));
    for (int k = n - 1; k >= 1; --k) {
      Polynomial sum;
      for (int j = k + 1; j <= n; ++j) sum += row[j] * bell(j, k);
      Polynomial a = (-sum).times_monomial(Monomial::var(1, -k));
      // The solve must stay inside the allowed Laurent shape: only X1 may
      // carry a negative exponent, and no variable beyond X_{n-k+1} occurs.
      for (auto& [m, c] : a.terms())
        for (auto& [v, e] : m.exponents())
          if (v < 1 || v > n - k + 1 || (e < 0 && v != 1))
            throw std::logic_error("ATable: triangular solve produced an invalid term");
      row[k] = std::move(a);
    }
  }
}

const Polynomial& ATable::at(int n, int k) const {
  if (n < 0 || n > nmax_ || k < 0 || k > n)
    throw std::domain_error("ATable::at: index out of range");
  return rows_[n][k];
}

} // namespace facpol::bell
