#include <facpol/combinat.hpp>

#include <mutex>
#include <stdexcept>
#include <vector>

namespace facpol::combinat {

namespace {

// Triangular tables grown row by row under a lock; reads of finished rows
// go through the returned copy, so callers never observe a partial row.
class Triangle {
 public:
  using RowRule = Int (*)(const std::vector<std::vector<Int>>& rows, long n, long k);

  explicit Triangle(RowRule rule) : rule_(rule) { rows_.push_back({Int(1)}); }

  Int at(long n, long k) {
    std::lock_guard<std::mutex> lock(mutex_);
    while (static_cast<long>(rows_.size()) <= n) {
      long m = static_cast<long>(rows_.size());
      std::vector<Int> row(m + 1);
      for (long j = 0; j <= m; ++j) row[j] = rule_(rows_, m, j);
      rows_.push_back(std::move(row));
    }
    return rows_[n][k];
  }

 private:
  RowRule rule_;
  std::vector<std::vector<Int>> rows_;
  std::mutex mutex_;
};

void require_triangle_args(const char* who, long n, long k) {
  if (n < 0 || k < 0)
    throw std::domain_error(std::string(who) + ": indices must be non-negative");
}

} // namespace

Int factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: n must be non-negative");
  Int r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i; // exact at every step
  }
  return r;
}

Int falling(const Int& x, long j) {
  if (j < 0) throw std::domain_error("falling: j must be non-negative");
  Int r = 1;
  for (long i = 0; i < j; ++i) r *= x - i;
  return r;
}

Int rising(const Int& x, long j) {
  if (j < 0) throw std::domain_error("rising: j must be non-negative");
  Int r = 1;
  for (long i = 0; i < j; ++i) r *= x + i;
  return r;
}

Int stirling2(long n, long k) {
  require_triangle_args("stirling2", n, k);
  if (k > n) return 0;
  // S(n,k) = k S(n-1,k) + S(n-1,k-1)
  static Triangle table([](const std::vector<std::vector<Int>>& rows, long n, long k) -> Int {
    if (k == 0) return Int(0);
    Int v = rows[n - 1][k - 1];
    if (k < n) v += k * rows[n - 1][k];
    return v;
  });
  return table.at(n, k);
}

Int stirling1_signed(long n, long k) {
  require_triangle_args("stirling1_signed", n, k);
  if (k > n) return 0;
  // s1(n,k) = s1(n-1,k-1) - (n-1) s1(n-1,k)
  static Triangle table([](const std::vector<std::vector<Int>>& rows, long n, long k) -> Int {
    Int v = 0;
    if (k >= 1) v = rows[n - 1][k - 1];
    if (k < n) v -= (n - 1) * rows[n - 1][k];
    return v;
  });
  return table.at(n, k);
}

Int cycle(long n, long k) {
  Int v = stirling1_signed(n, k);
  return ((n - k) % 2 != 0) ? -v : v;
}

Int lah_signed(long n, long k) {
  require_triangle_args("lah_signed", n, k);
  if (n == 0 && k == 0) return 1;
  if (k == 0 || k > n) return 0;
  Int v = factorial(n) / factorial(k) * binomial(n - 1, k - 1);
  return (n % 2 != 0) ? -v : v;
}

Int lah_unsigned(long n, long k) {
  Int v = lah_signed(n, k);
  return v < 0 ? Int(-v) : v;
}

Int number(NumberFamilyId id, long n, long k) {
  switch (id) {
    case NumberFamilyId::Stirling1Signed: return stirling1_signed(n, k);
    case NumberFamilyId::Stirling2: return stirling2(n, k);
    case NumberFamilyId::Cycle: return cycle(n, k);
    case NumberFamilyId::LahSigned: return lah_signed(n, k);
    case NumberFamilyId::LahUnsigned: return lah_unsigned(n, k);
  }
  throw std::logic_error("number: unknown family tag");
}

} // namespace facpol::combinat
