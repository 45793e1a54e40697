#pragma once

#include <facpol/numeric.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace facpol {

/// Power product over the indeterminates X0, X1, X2, ...
///
/// Exponents are stored sparsely (nonzero entries only, sorted by variable
/// index). Negative exponents are permitted on X0 and X1 only; the
/// constructors enforce this.
class Monomial {
 public:
  Monomial() = default;

  static Monomial one() { return Monomial{}; }
  static Monomial var(int index, int exp = 1);

  /// Builds from (variable, exponent) pairs; zero exponents are dropped.
  static Monomial from_exponents(std::vector<std::pair<int, int>> exps);

  const std::vector<std::pair<int, int>>& exponents() const { return exps_; }
  int exponent(int var) const;
  bool is_one() const { return exps_.empty(); }

  /// Sum of all exponents (may be negative for Laurent monomials).
  int total_degree() const;

  Monomial times(const Monomial& other) const;

  bool operator==(const Monomial& other) const = default;

 private:
  std::vector<std::pair<int, int>> exps_;
};

/// Canonical term order: total degree descending, then lexicographically
/// ascending on the dense exponent sequence (e0, e1, e2, ...).
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate Laurent polynomial with big-integer coefficients.
/// Immutable value type; the empty term map is the zero polynomial.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Int, MonomialOrder>;

  Polynomial() = default;
  Polynomial(Int c);                        // constant
  Polynomial(Int c, Monomial m);            // single term

  static Polynomial zero() { return {}; }
  static Polynomial var(int index, int exp = 1);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other);

  Polynomial scaled(const Int& c) const;
  Polynomial times_monomial(const Monomial& m, const Int& c = Int(1)) const;

  /// Sum of all coefficients (every indeterminate replaced by 1).
  Int eval_all_ones() const;

  /// Exact evaluation at a full rational assignment. Throws if a variable
  /// of the polynomial is unassigned, or zero is assigned where a negative
  /// exponent occurs.
  Rat eval(const std::map<int, Rat>& assignment) const;

  bool operator==(const Polynomial& other) const = default;

 private:
  TermMap terms_;
};

/// Canonical rendering: terms in MonomialOrder, `c*Xi^e*...` with `^1` and
/// unit coefficients suppressed; the zero polynomial prints as "0".
std::string to_canonical_string(const Polynomial& p);

/// Inverse of to_canonical_string. Throws std::invalid_argument on
/// malformed input.
Polynomial parse_polynomial(const std::string& text);

/// JSON form: array of {"coeff": decimal string, "exps": {var: exp}} in
/// canonical term order.
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

} // namespace facpol
