#pragma once

#include <facpol/numeric.hpp>

#include <vector>

namespace facpol::series {

/// Truncated formal power series with exact rational coefficients.
/// coeff(i) is the plain coefficient of x^i; the Taylor coefficient
/// D^n(f)(0) is n! * coeff(n). Mixed-order arithmetic truncates to the
/// smaller order.
class Series {
 public:
  explicit Series(int order) : coeffs_(order + 1) {
    if (order < 0) throw_bad_order();
  }
  explicit Series(std::vector<Rat> coeffs);

  static Series monomial(int order, int n, Rat c = Rat(1));
  static Series constant(int order, Rat c);
  static Series identity(int order) { return monomial(order, 1); }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rat& coeff(int i) const { return coeffs_.at(i); }
  void set_coeff(int i, Rat v) { coeffs_.at(i) = std::move(v); }

  Series operator+(const Series& other) const;
  Series operator-(const Series& other) const;
  Series operator*(const Series& other) const;
  Series scaled(const Rat& c) const;

  bool operator==(const Series& other) const = default;

 private:
  [[noreturn]] static void throw_bad_order();
  std::vector<Rat> coeffs_;
};

/// Termwise derivative; the order drops by one. Rejects order 0.
Series derive(const Series& f);

/// D^n(f)(0) = n! * coeff(n). Rejects n > order.
Rat taylor_coeff(const Series& f, int n);

/// f(g(x)) truncated to the common order; requires g(0) = 0.
Series compose(const Series& f, const Series& g);

/// The compositional inverse h with g(h(x)) = h(g(x)) = x up to the
/// working order; requires g(0) = 0 and g'(0) != 0.
Series invert_composition(const Series& g);

/// g^k truncated to g.order().
Series pow_trunc(const Series& g, int k);

} // namespace facpol::series
