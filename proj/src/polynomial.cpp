#include <facpol/polynomial.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace facpol {

namespace {

void check_laurent(int var, int exp) {
  if (exp < 0 && var > 1)
    throw std::invalid_argument("Monomial: negative exponent only allowed on X0 and X1");
}

} // namespace

Monomial Monomial::var(int index, int exp) {
  if (index < 0) throw std::invalid_argument("Monomial: negative variable index");
  if (exp == 0) return one();
  check_laurent(index, exp);
  Monomial m;
  m.exps_ = {{index, exp}};
  return m;
}

Monomial Monomial::from_exponents(std::vector<std::pair<int, int>> exps) {
  std::sort(exps.begin(), exps.end());
  Monomial m;
  for (auto& [v, e] : exps) {
    if (v < 0) throw std::invalid_argument("Monomial: negative variable index");
    if (!m.exps_.empty() && m.exps_.back().first == v)
      throw std::invalid_argument("Monomial: duplicate variable");
    if (e == 0) continue;
    check_laurent(v, e);
    m.exps_.emplace_back(v, e);
  }
  return m;
}

int Monomial::exponent(int var) const {
  for (auto& [v, e] : exps_)
    if (v == var) return e;
  return 0;
}

int Monomial::total_degree() const {
  int d = 0;
  for (auto& [v, e] : exps_) d += e;
  return d;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial m;
  auto a = exps_.begin(), b = other.exps_.begin();
  while (a != exps_.end() || b != other.exps_.end()) {
    if (b == other.exps_.end() || (a != exps_.end() && a->first < b->first)) {
      m.exps_.push_back(*a++);
    } else if (a == exps_.end() || b->first < a->first) {
      m.exps_.push_back(*b++);
    } else {
      int e = a->second + b->second;
      if (e != 0) {
        check_laurent(a->first, e);
        m.exps_.emplace_back(a->first, e);
      }
      ++a;
      ++b;
    }
  }
  return m;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  // Lex ascending on the exponent sequence (e1, e2, ..., e0): the proper
  // indeterminates X1, X2, ... decide first, X0 breaks remaining ties.
  int vmax = 0;
  for (auto& [v, e] : a.exponents()) vmax = std::max(vmax, v);
  for (auto& [v, e] : b.exponents()) vmax = std::max(vmax, v);
  for (int v = 1; v <= vmax; ++v) {
    int xa = a.exponent(v), xb = b.exponent(v);
    if (xa != xb) return xa < xb;
  }
  return a.exponent(0) < b.exponent(0);
}

Polynomial::Polynomial(Int c) {
  if (c != 0) terms_.emplace(Monomial::one(), std::move(c));
}

Polynomial::Polynomial(Int c, Monomial m) {
  if (c != 0) terms_.emplace(std::move(m), std::move(c));
}

Polynomial Polynomial::var(int index, int exp) {
  return Polynomial(Int(1), Monomial::var(index, exp));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (auto& [m, c] : other.terms_) {
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  Polynomial r = *this;
  r += other;
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  return *this + (-other);
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  Polynomial r;
  for (auto& [ma, ca] : terms_)
    for (auto& [mb, cb] : other.terms_) {
      Monomial m = ma.times(mb);
      auto it = r.terms_.find(m);
      if (it == r.terms_.end()) {
        r.terms_.emplace(std::move(m), ca * cb);
      } else {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

Polynomial Polynomial::scaled(const Int& c) const {
  Polynomial r;
  if (c == 0) return r;
  for (auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Int& c) const {
  Polynomial r;
  if (c == 0) return r;
  for (auto& [mm, k] : terms_) r.terms_.emplace(mm.times(m), k * c);
  return r;
}

Int Polynomial::eval_all_ones() const {
  Int s = 0;
  for (auto& [m, c] : terms_) s += c;
  return s;
}

Rat Polynomial::eval(const std::map<int, Rat>& assignment) const {
  Rat s = 0;
  for (auto& [m, c] : terms_) {
    Rat t(c);
    for (auto& [v, e] : m.exponents()) {
      auto it = assignment.find(v);
      if (it == assignment.end())
        throw std::invalid_argument("eval: no value assigned to X" + std::to_string(v));
      if (e < 0 && it->second == 0)
        throw std::domain_error("eval: zero assigned to X" + std::to_string(v) +
                                " which occurs with negative exponent");
      t *= rat_pow(it->second, e);
    }
    s += t;
  }
  return s;
}

std::string to_canonical_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto& [m, c] : p.terms()) {
    bool neg = c < 0;
    if (first) {
      if (neg) out << '-';
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    Int a = neg ? Int(-c) : c;
    bool need_sep = false;
    if (a != 1 || m.is_one()) {
      out << a.str();
      need_sep = true;
    }
    for (auto& [v, e] : m.exponents()) {
      if (need_sep) out << '*';
      need_sep = true;
      out << 'X' << v;
      if (e != 1) out << '^' << e;
    }
  }
  return out.str();
}

namespace {

// Recursive-descent helpers for parse_polynomial.
struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char get() {
    skip_ws();
    if (i >= s.size()) throw std::invalid_argument("parse: unexpected end of input");
    return s[i++];
  }
};

Int parse_integer(Cursor& c) {
  c.skip_ws();
  std::string digits;
  if (c.peek() == '-' || c.peek() == '+') digits += c.get();
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    digits += c.s[c.i++];
  if (digits.empty() || !std::isdigit(static_cast<unsigned char>(digits.back())))
    throw std::invalid_argument("parse: expected integer at position " + std::to_string(c.i));
  return Int(digits);
}

// One term: [integer] ('*'? Xi['^'e])*  -- sign already consumed by caller.
std::pair<Monomial, Int> parse_term(Cursor& c) {
  Int coeff = 1;
  bool have_factor = false;
  if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    coeff = parse_integer(c);
    have_factor = true;
  }
  std::vector<std::pair<int, int>> exps;
  while (true) {
    char p = c.peek();
    if (p == '*') {
      c.get();
      p = c.peek();
      if (p != 'X') throw std::invalid_argument("parse: expected variable after '*'");
    } else if (p != 'X' || have_factor) {
      break; // a second factor requires an explicit '*'
    }
    c.get(); // 'X'
    Int vi = parse_integer(c);
    int var = static_cast<int>(vi);
    int exp = 1;
    if (c.peek() == '^') {
      c.get();
      exp = static_cast<int>(parse_integer(c));
    }
    exps.emplace_back(var, exp);
    have_factor = true;
  }
  if (!have_factor) throw std::invalid_argument("parse: empty term");
  return {Monomial::from_exponents(std::move(exps)), coeff};
}

} // namespace

Polynomial parse_polynomial(const std::string& text) {
  Cursor c{text};
  if (c.eof()) throw std::invalid_argument("parse: empty input");
  Polynomial result;
  bool first = true;
  while (!c.eof()) {
    int sign = 1;
    char p = c.peek();
    if (p == '+' || p == '-') {
      c.get();
      if (p == '-') sign = -1;
    } else if (!first) {
      throw std::invalid_argument("parse: expected '+' or '-' between terms");
    }
    auto [mono, coeff] = parse_term(c);
    result += Polynomial(sign < 0 ? Int(-coeff) : coeff, std::move(mono));
    first = false;
  }
  return result;
}

nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& [m, c] : p.terms()) {
    nlohmann::json exps = nlohmann::json::object();
    for (auto& [v, e] : m.exponents()) exps[std::to_string(v)] = e;
    arr.push_back({{"coeff", c.str()}, {"exps", exps}});
  }
  return arr;
}

Polynomial polynomial_from_json(const nlohmann::json& j) {
  Polynomial p;
  for (auto& term : j) {
    std::vector<std::pair<int, int>> exps;
    for (auto& [k, v] : term.at("exps").items())
      exps.emplace_back(std::stoi(k), v.get<int>());
    p += Polynomial(Int(term.at("coeff").get<std::string>()),
                    Monomial::from_exponents(std::move(exps)));
  }
  return p;
}

} // namespace facpol
