#include <facpol/verify.hpp>

#include <facpol/bell.hpp>
#include <facpol/combinat.hpp>
#include <facpol/factorial.hpp>
#include <facpol/numfam.hpp>
#include <facpol/series.hpp>

#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace facpol::verify {

namespace cb = facpol::combinat;
namespace nf = facpol::numfam;
namespace sr = facpol::series;

namespace {

struct IdentityInfo {
  IdentityId id;
  const char* name;
  Range defaults;
  bool polynomial; // capped at nmax 10
};

const IdentityInfo kIdentities[] = {
    {IdentityId::AbInversion, "ab-inversion", {8, 8}, true},
    {IdentityId::StirlingInversion, "stirling-inversion", {30, 30}, false},
    {IdentityId::LahSelfInverse, "lah-self-inverse", {30, 30}, false},
    {IdentityId::LahByStirling, "lah-by-stirling", {30, 30}, false},
    {IdentityId::Eq6Eq7Roundtrip, "eq6-eq7-roundtrip", {8, 8}, true},
    {IdentityId::Prop31i, "prop31i", {8, 8}, true},
    {IdentityId::Prop31ii, "prop31ii", {8, 8}, true},
    {IdentityId::PotentialOnes, "potential-ones", {10, 10}, true},
    {IdentityId::BellOnes, "bell-ones", {10, 10}, true},
    {IdentityId::AOnes, "a-ones", {10, 10}, true},
    {IdentityId::UpperAssocSpec, "upper-assoc-spec", {8, 8}, true},
    {IdentityId::LowerAssocSpec, "lower-assoc-spec", {8, 8}, true},
    {IdentityId::Psw1, "psw1", {20, 20}, false},
    {IdentityId::Prop42, "prop42", {20, 20}, false},
    {IdentityId::Prop44, "prop44", {20, 20}, false},
    {IdentityId::Prf1, "prf1", {25, 25}, false},
    {IdentityId::FaaDiBruno, "faa-di-bruno", {8, 20}, true},
    {IdentityId::BellCoeff, "bell-coeff", {8, 5}, true},
    {IdentityId::ACoeff, "a-coeff", {8, 5}, true},
    {IdentityId::ClosingN1, "closing-n1", {20, 20}, false},
    {IdentityId::ClosingN2, "closing-n2", {20, 20}, false},
    {IdentityId::ClosingN3, "closing-n3", {20, 20}, false},
};

const IdentityInfo& info(IdentityId id) {
  for (auto& i : kIdentities)
    if (i.id == id) return i;
  throw std::logic_error("unknown identity id");
}

using Check = std::function<std::optional<Counterexample>(long nmax, long kmax,
                                                          std::uint64_t seed)>;

std::optional<Counterexample> fail(long n, long k, const std::string& lhs,
                                   const std::string& rhs) {
  return Counterexample{n, k, lhs, rhs};
}

std::optional<Counterexample> int_cx(long n, long k, const Int& lhs, const Int& rhs) {
  if (lhs == rhs) return std::nullopt;
  return fail(n, k, lhs.str(), rhs.str());
}

std::optional<Counterexample> poly_cx(long n, long k, const Polynomial& lhs,
                                      const Polynomial& rhs) {
  if (lhs == rhs) return std::nullopt;
  return fail(n, k, to_canonical_string(lhs), to_canonical_string(rhs));
}

std::string rat_str(const Rat& r) {
  std::ostringstream s;
  s << r;
  return s.str();
}

Polynomial delta_poly(long n, long k) {
  return n == k ? Polynomial(Int(1)) : Polynomial::zero();
}

// --- number-triangle identities ------------------------------------------

std::optional<Counterexample> check_stirling_inversion(long nmax, long, std::uint64_t) {
  for (long n = 0; n <= nmax; ++n)
    for (long k = 0; k <= n; ++k) {
      Int s = 0;
      for (long j = k; j <= n; ++j) s += cb::stirling1_signed(n, j) * cb::stirling2(j, k);
      if (auto cx = int_cx(n, k, s, Int(n == k ? 1 : 0))) return cx;
    }
  return std::nullopt;
}

std::optional<Counterexample> check_lah_self_inverse(long nmax, long, std::uint64_t) {
  for (long n = 0; n <= nmax; ++n)
    for (long k = 0; k <= n; ++k) {
      Int s = 0;
      for (long j = k; j <= n; ++j) s += cb::lah_signed(n, j) * cb::lah_signed(j, k);
      if (auto cx = int_cx(n, k, s, Int(n == k ? 1 : 0))) return cx;
    }
  return std::nullopt;
}

std::optional<Counterexample> check_lah_by_stirling(long nmax, long, std::uint64_t) {
  for (long n = 0; n <= nmax; ++n)
    for (long k = 0; k <= n; ++k) {
      Int s = 0;
      for (long j = k; j <= n; ++j) {
        Int t = cb::stirling1_signed(n, j) * cb::stirling2(j, k);
        s += (j % 2 != 0) ? -t : t;
      }
      if (auto cx = int_cx(n, k, s, cb::lah_signed(n, k))) return cx;
    }
  return std::nullopt;
}

// --- polynomial identities ------------------------------------------------

std::optional<Counterexample> check_ab_inversion(long nmax, long, std::uint64_t) {
  bell::ATable a(nmax);
  for (long n = 1; n <= nmax; ++n)
    for (long k = 1; k <= n; ++k) {
      Polynomial s;
      for (long j = k; j <= n; ++j) s += a.at(n, j) * bell::bell(j, k);
      if (auto cx = poly_cx(n, k, s, delta_poly(n, k))) return cx;
    }
  return std::nullopt;
}

std::optional<Counterexample> check_eq6_eq7_roundtrip(long nmax, long, std::uint64_t) {
  for (long n = 0; n <= nmax; ++n)
    for (long k = 0; k <= n; ++k) {
      int ni = static_cast<int>(n), ki = static_cast<int>(k);
      if (auto cx = poly_cx(n, k, fac::lower_from_potential(ni, ki),
                            fac::lower_factorial_direct(ni, ki)))
        return cx;
      if (auto cx = poly_cx(n, k, fac::potential_from_lower(ni, ki), fac::potential(ni, ki)))
        return cx;
      if (auto cx = poly_cx(n, k, fac::upper_from_potential(ni, ki),
                            fac::upper_factorial_direct(ni, ki)))
        return cx;
    }
  return std::nullopt;
}

std::optional<Counterexample> check_prop31(long nmax, bool part_i) {
  for (long n = 0; n <= nmax; ++n)
    for (long k = 0; k <= n; ++k) {
      int ni = static_cast<int>(n), ki = static_cast<int>(k);
      auto cx = part_i ? poly_cx(n, k, fac::upper_from_lower(ni, ki),
                                 fac::upper_factorial_direct(ni, ki))
                       : poly_cx(n, k, fac::lower_from_upper(ni, ki),
                                 fac::lower_factorial_direct(ni, ki));
      if (cx) return cx;
    }
  return std::nullopt;
}

std::optional<Counterexample> check_potential_ones(long nmax, long, std::uint64_t) {
  for (long n = 0; n <= nmax; ++n)
    for (long k = 0; k <= n; ++k) {
      Int lhs = fac::potential(static_cast<int>(n), k).eval_all_ones();
      if (auto cx = int_cx(n, k, lhs, int_pow(Int(k), n))) return cx;
    }
  return std::nullopt;
}

std::optional<Counterexample> check_bell_ones(long nmax, long, std::uint64_t) {
  for (long n = 0; n <= nmax; ++n)
    for (long k = 0; k <= n; ++k)
      if (auto cx = int_cx(n, k, bell::bell(n, k).eval_all_ones(), cb::stirling2(n, k)))
        return cx;
  return std::nullopt;
}

std::optional<Counterexample> check_a_ones(long nmax, long, std::uint64_t) {
  bell::ATable a(nmax);
  for (long n = 1; n <= nmax; ++n)
    for (long k = 1; k <= n; ++k)
      if (auto cx = int_cx(n, k, a.at(n, k).eval_all_ones(), cb::stirling1_signed(n, k)))
        return cx;
  return std::nullopt;
}

std::optional<Counterexample> check_assoc_spec(long nmax, bool upper) {
  for (long n = 1; n <= nmax; ++n)
    for (long k = 0; k <= n; ++k) {
      int ni = static_cast<int>(n), ki = static_cast<int>(k);
      Int lhs = upper ? nf::upper_assoc(n, k) : nf::lower_assoc(n, k);
      Int rhs = (upper ? fac::upper_factorial(ni, ki) : fac::lower_factorial(ni, ki))
                    .eval_all_ones();
      if (auto cx = int_cx(n, k, lhs, rhs)) return cx;
    }
  return std::nullopt;
}

// --- section-4 number identities -----------------------------------------

std::optional<Counterexample> check_psw1(long nmax, long kmax, std::uint64_t) {
  for (long n = 1; n <= nmax; ++n)
    for (long k = 1; k <= kmax; ++k) {
      Int lhs = nf::power_sum_direct({nf::WeightScheme::Ones{}}, n, k);
      Int rhs = 0;
      for (long j = 1; j <= std::min(n, k); ++j)
        rhs += cb::factorial(j) * cb::stirling2(n, j) * nf::sum_rule_ones(k, j);
      if (auto cx = int_cx(n, k, lhs, rhs)) return cx;
    }
  return std::nullopt;
}

std::optional<Counterexample> check_prop42(long nmax, long kmax, std::uint64_t) {
  for (long n = 1; n <= nmax; ++n)
    for (long k = 1; k <= kmax; ++k)
      if (auto cx = int_cx(n, k, nf::upper_assoc(n, k), nf::prop42_rhs(n, k))) return cx;
  return std::nullopt;
}

std::optional<Counterexample> check_prop44(long nmax, long kmax, std::uint64_t) {
  for (long n = 1; n <= nmax; ++n)
    for (long k = 1; k <= kmax; ++k)
      if (auto cx = int_cx(n, k, nf::lower_assoc(n, k), nf::prop44_rhs(n, k))) return cx;
  return std::nullopt;
}

std::optional<Counterexample> check_prf1(long nmax, long, std::uint64_t) {
  for (long k = 1; k <= nmax; ++k) {
    for (long j = 0; j <= k - 1; ++j)
      if (auto cx = int_cx(k, j, nf::prf1_lhs(k, j), k * cb::stirling1_signed(k - 1, j)))
        return cx;
    // follow-up form: sum_{r=j}^k C(r,j) s1(k,r) = s1(k-1,j-1) + s1(k-1,j)
    for (long j = 1; j <= k; ++j) {
      Int lhs = 0;
      for (long r = j; r <= k; ++r) lhs += cb::binomial(r, j) * cb::stirling1_signed(k, r);
      Int rhs = cb::stirling1_signed(k - 1, j - 1) +
                (j <= k - 1 ? cb::stirling1_signed(k - 1, j) : Int(0));
      if (auto cx = int_cx(k, j, lhs, rhs)) return cx;
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> check_closing(long kmax, int n) {
  auto coeffs = nf::closing_identity_coeffs(n);
  for (long k = 2; k <= kmax; ++k) {
    Int lhs = 0;
    for (long r = 1; r <= k; ++r) {
      Int t = cb::cycle(k, r) * int_pow(Int(r), n);
      lhs += (r % 2 != 0) ? -t : t;
    }
    Int rhs = 0;
    for (int m = 1; m <= n; ++m) rhs += coeffs[m - 1] * cb::cycle(k - 1, m);
    if (auto cx = int_cx(n, k, lhs, rhs)) return cx;
  }
  return std::nullopt;
}

// --- randomized series identities ----------------------------------------

Rat random_rat(std::mt19937_64& rng, bool nonzero_num = false) {
  long num = static_cast<long>(rng() % 19) - 9; // [-9, 9]
  while (nonzero_num && num == 0) num = static_cast<long>(rng() % 19) - 9;
  long den = static_cast<long>(rng() % 9) + 1; // [1, 9]
  return Rat(num, den);
}

sr::Series random_series(std::mt19937_64& rng, int order, bool zero_const,
                         bool unit_slot_nonzero) {
  sr::Series s(order);
  s.set_coeff(0, zero_const ? Rat(0) : random_rat(rng));
  for (int i = 1; i <= order; ++i) s.set_coeff(i, random_rat(rng));
  if (unit_slot_nonzero && s.coeff(1) == 0) s.set_coeff(1, random_rat(rng, true));
  return s;
}

std::map<int, Rat> taylor_assignment(const sr::Series& g, int up_to) {
  std::map<int, Rat> a;
  for (int j = 0; j <= up_to; ++j) a[j] = sr::taylor_coeff(g, j);
  return a;
}

std::optional<Counterexample> check_faa_di_bruno(long order, long trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  int ord = static_cast<int>(order);
  for (long t = 0; t < trials; ++t) {
    sr::Series f = random_series(rng, ord, false, false);
    sr::Series g = random_series(rng, ord, true, false);
    sr::Series fg = sr::compose(f, g);
    auto args = taylor_assignment(g, ord);
    for (int n = 0; n <= ord; ++n) {
      Rat lhs = sr::taylor_coeff(fg, n);
      Rat rhs = 0;
      for (int k = 0; k <= n; ++k)
        rhs += sr::taylor_coeff(f, k) * bell::bell(n, k).eval(args);
      if (lhs != rhs) return fail(n, t, rat_str(lhs), rat_str(rhs));
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> check_coeff_semantics(long order, long trials,
                                                   std::uint64_t seed, bool a_side) {
  std::mt19937_64 rng(seed);
  int ord = static_cast<int>(order);
  std::optional<bell::ATable> a;
  if (a_side) a.emplace(ord);
  for (long t = 0; t < trials; ++t) {
    sr::Series g = random_series(rng, ord, true, true);
    sr::Series target = a_side ? sr::invert_composition(g) : g;
    auto args = taylor_assignment(g, ord);
    for (int n = 1; n <= ord; ++n)
      for (int k = 1; k <= n; ++k) {
        // n-th Taylor coefficient of target^k / k!
        Rat rhs = sr::taylor_coeff(sr::pow_trunc(target, k), n) / Rat(cb::factorial(k));
        const Polynomial& p = a_side ? a->at(n, k) : bell::bell(n, k);
        Rat lhs = p.eval(args);
        if (lhs != rhs) return fail(n, k, rat_str(lhs), rat_str(rhs));
      }
  }
  return std::nullopt;
}

Check checker(IdentityId id) {
  using enum IdentityId;
  switch (id) {
    case AbInversion: return check_ab_inversion;
    case StirlingInversion: return check_stirling_inversion;
    case LahSelfInverse: return check_lah_self_inverse;
    case LahByStirling: return check_lah_by_stirling;
    case Eq6Eq7Roundtrip: return check_eq6_eq7_roundtrip;
    case Prop31i:
      return [](long n, long, std::uint64_t) { return check_prop31(n, true); };
    case Prop31ii:
      return [](long n, long, std::uint64_t) { return check_prop31(n, false); };
    case PotentialOnes: return check_potential_ones;
    case BellOnes: return check_bell_ones;
    case AOnes: return check_a_ones;
    case UpperAssocSpec:
      return [](long n, long, std::uint64_t) { return check_assoc_spec(n, true); };
    case LowerAssocSpec:
      return [](long n, long, std::uint64_t) { return check_assoc_spec(n, false); };
    case Psw1: return check_psw1;
    case Prop42: return check_prop42;
    case Prop44: return check_prop44;
    case Prf1: return check_prf1;
    case FaaDiBruno: return check_faa_di_bruno;
    case BellCoeff:
      return [](long n, long k, std::uint64_t s) { return check_coeff_semantics(n, k, s, false); };
    case ACoeff:
      return [](long n, long k, std::uint64_t s) { return check_coeff_semantics(n, k, s, true); };
    case ClosingN1:
      return [](long, long k, std::uint64_t) { return check_closing(k, 1); };
    case ClosingN2:
      return [](long, long k, std::uint64_t) { return check_closing(k, 2); };
    case ClosingN3:
      return [](long, long k, std::uint64_t) { return check_closing(k, 3); };
  }
  throw std::logic_error("unknown identity id");
}

} // namespace

std::vector<IdentityId> all_identities() {
  std::vector<IdentityId> v;
  for (auto& i : kIdentities) v.push_back(i.id);
  return v;
}

std::string identity_name(IdentityId id) { return info(id).name; }

std::optional<IdentityId> parse_identity(const std::string& name) {
  for (auto& i : kIdentities)
    if (name == i.name) return i.id;
  return std::nullopt;
}

Range default_range(IdentityId id) { return info(id).defaults; }

IdentityReport run_identity(IdentityId id, long nmax, long kmax, std::uint64_t seed,
                            long max_n) {
  const IdentityInfo& i = info(id);
  long cap = i.polynomial ? std::min<long>(10, max_n) : max_n;
  if (nmax < 0 || nmax > cap)
    throw std::invalid_argument("run_identity: nmax out of range for " + std::string(i.name) +
                                " (limit " + std::to_string(cap) + ")");
  if (kmax < 0 || (!(id == IdentityId::FaaDiBruno || id == IdentityId::BellCoeff ||
                     id == IdentityId::ACoeff) &&
                   kmax > max_n))
    throw std::invalid_argument("run_identity: kmax out of range for " + std::string(i.name));
  IdentityReport r;
  r.identity = id;
  r.nmax = nmax;
  r.kmax = kmax;
  auto start = std::chrono::steady_clock::now();
  r.counterexample = checker(id)(nmax, kmax, seed);
  r.elapsed = std::chrono::steady_clock::now() - start;
  r.passed = !r.counterexample.has_value();
  return r;
}

std::string report_to_text(const IdentityReport& r) {
  std::ostringstream s;
  s << identity_name(r.identity) << ": " << (r.passed ? "PASS" : "FAIL") << " nmax="
    << r.nmax << " kmax=" << r.kmax;
  if (r.counterexample) {
    auto& c = *r.counterexample;
    s << " counterexample (n=" << c.n << ", k=" << c.k << ") lhs=" << c.lhs
      << " rhs=" << c.rhs;
  }
  return s.str();
}

nlohmann::json report_to_json(const IdentityReport& r) {
  nlohmann::json j{{"identity", identity_name(r.identity)},
                   {"nmax", r.nmax},
                   {"kmax", r.kmax},
                   {"passed", r.passed}};
  if (r.counterexample) {
    auto& c = *r.counterexample;
    j["counterexample"] = {{"n", c.n}, {"k", c.k}, {"lhs", c.lhs}, {"rhs", c.rhs}};
  }
  return j;
}

} // namespace facpol::verify
