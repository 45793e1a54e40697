#pragma once

#include <facpol/numeric.hpp>

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace facpol::verify {

/// Every identity the library can check, one checker per name.
enum class IdentityId {
  AbInversion,
  StirlingInversion,
  LahSelfInverse,
  LahByStirling,
  Eq6Eq7Roundtrip,
  Prop31i,
  Prop31ii,
  PotentialOnes,
  BellOnes,
  AOnes,
  UpperAssocSpec,
  LowerAssocSpec,
  Psw1,
  Prop42,
  Prop44,
  Prf1,
  FaaDiBruno,
  BellCoeff,
  ACoeff,
  ClosingN1,
  ClosingN2,
  ClosingN3,
};

std::vector<IdentityId> all_identities();
std::string identity_name(IdentityId id);
std::optional<IdentityId> parse_identity(const std::string& name);

struct Counterexample {
  long n = 0;
  long k = 0;
  std::string lhs; // canonical text of the evaluated left side
  std::string rhs;
};

struct IdentityReport {
  IdentityId identity;
  long nmax = 0;
  long kmax = 0;
  bool passed = false;
  std::optional<Counterexample> counterexample;
  std::chrono::nanoseconds elapsed{0};
};

struct Range {
  long nmax;
  long kmax; // trial count for the randomized series identities
};

/// Default sweep rectangle per identity.
Range default_range(IdentityId id);

/// Exhaustively checks one identity over the rectangle. The seed feeds the
/// randomized series identities; the rest ignore it. Throws on ranges
/// beyond the configured limits (max_n; polynomial identities are
/// additionally capped at 10).
IdentityReport run_identity(IdentityId id, long nmax, long kmax, std::uint64_t seed,
                            long max_n = 30);

/// Deterministic single-line rendering; elapsed time is deliberately not
/// part of it (it goes to diagnostics, reports must be byte-stable).
std::string report_to_text(const IdentityReport& r);
nlohmann::json report_to_json(const IdentityReport& r);

} // namespace facpol::verify
