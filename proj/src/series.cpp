#include <facpol/series.hpp>

#include <facpol/combinat.hpp>

#include <algorithm>
#include <stdexcept>

namespace facpol::series {

void Series::throw_bad_order() { throw std::domain_error("Series: order must be >= 0"); }

Series::Series(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw_bad_order();
}

Series Series::monomial(int order, int n, Rat c) {
  Series s(order);
  if (n < 0) throw std::domain_error("Series::monomial: negative degree");
  if (n <= order) s.coeffs_[n] = std::move(c);
  return s;
}

Series Series::constant(int order, Rat c) { return monomial(order, 0, std::move(c)); }

Series Series::operator+(const Series& other) const {
  int n = std::min(order(), other.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) r.coeffs_[i] = coeffs_[i] + other.coeffs_[i];
  return r;
}

Series Series::operator-(const Series& other) const {
  int n = std::min(order(), other.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) r.coeffs_[i] = coeffs_[i] - other.coeffs_[i];
  return r;
}

Series Series::operator*(const Series& other) const {
  int n = std::min(order(), other.order());
  Series r(n);
  for (int i = 0; i <= n; ++i)
    for (int j = 0; i + j <= n; ++j) r.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  return r;
}

Series Series::scaled(const Rat& c) const {
  Series r(order());
  for (int i = 0; i <= order(); ++i) r.coeffs_[i] = coeffs_[i] * c;
  return r;
}

Series derive(const Series& f) {
  if (f.order() < 1) throw std::domain_error("derive: order must be >= 1");
  Series r(f.order() - 1);
  for (int i = 1; i <= f.order(); ++i) r.set_coeff(i - 1, f.coeff(i) * i);
  return r;
}

Rat taylor_coeff(const Series& f, int n) {
  if (n < 0 || n > f.order()) throw std::domain_error("taylor_coeff: n out of range");
  return f.coeff(n) * Rat(combinat::factorial(n));
}

Series compose(const Series& f, const Series& g) {
  if (g.coeff(0) != 0)
    throw std::domain_error("compose: inner series must have zero constant term");
  int n = std::min(f.order(), g.order());
  Series gn(n);
  for (int i = 0; i <= n; ++i) gn.set_coeff(i, g.coeff(i));
  // Horner accumulation: r = (...(f_N g + f_{N-1}) g + ...) + f_0
  Series r = Series::constant(n, f.coeff(n));
  for (int i = n - 1; i >= 0; --i) r = r * gn + Series::constant(n, f.coeff(i));
  return r;
}

Series pow_trunc(const Series& g, int k) {
  if (k < 0) throw std::domain_error("pow_trunc: negative power");
  Series r = Series::constant(g.order(), 1);
  for (int i = 0; i < k; ++i) r = r * g;
  return r;
}

Series invert_composition(const Series& g) {
  if (g.coeff(0) != 0)
    throw std::domain_error("invert_composition: g(0) must be 0");
  if (g.order() < 1 || g.coeff(1) == 0)
    throw std::domain_error("invert_composition: g'(0) must be nonzero");
  int n = g.order();
  // Solve h(g(x)) = x coefficient by coefficient; g^m has valuation m,
  // and [x^i] g^i = g1^i, so each h_i is determined by lower ones.
  Series h(n);
  std::vector<Series> gpow;
  gpow.reserve(n + 1);
  gpow.push_back(Series::constant(n, 1));
  for (int m = 1; m <= n; ++m) gpow.push_back(gpow.back() * g);
  for (int i = 1; i <= n; ++i) {
    Rat acc = (i == 1) ? Rat(1) : Rat(0);
    for (int m = 1; m < i; ++m) acc -= h.coeff(m) * gpow[m].coeff(i);
    h.set_coeff(i, acc / gpow[i].coeff(i));
  }
  return h;
}

} // namespace facpol::series
