#include <facpol/bell.hpp>
#include <facpol/combinat.hpp>
#include <facpol/factorial.hpp>
#include <facpol/numfam.hpp>
#include <facpol/polynomial.hpp>
#include <facpol/verify.hpp>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using facpol::Int;
using facpol::Polynomial;
namespace cb = facpol::combinat;
namespace nf = facpol::numfam;
namespace vf = facpol::verify;

long max_n_limit() {
  if (const char* env = std::getenv("FACPOLY_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
    std::cerr << "warning: ignoring invalid FACPOLY_MAX_N value '" << env << "'\n";
  }
  return 30;
}

struct TableSpec {
  std::string family;
  long nmin, kmin; // assoc families start at 1, triangles at 0
  Int (*value)(long n, long k);
};

const std::vector<TableSpec> kTables = {
    {"stirling2", 0, 0, [](long n, long k) { return cb::stirling2(n, k); }},
    {"stirling1", 0, 0, [](long n, long k) { return cb::stirling1_signed(n, k); }},
    {"cycle", 0, 0, [](long n, long k) { return cb::cycle(n, k); }},
    {"lah", 0, 0, [](long n, long k) { return cb::lah_signed(n, k); }},
    {"lah-unsigned", 0, 0, [](long n, long k) { return cb::lah_unsigned(n, k); }},
    {"upper-assoc", 1, 1, [](long n, long k) { return nf::upper_assoc(n, k); }},
    {"lower-assoc", 1, 1, [](long n, long k) { return nf::lower_assoc(n, k); }},
};

int emit_table(const std::string& family, long nmax, long kmax, const std::string& format) {
  const TableSpec* spec = nullptr;
  for (auto& t : kTables)
    if (t.family == family) spec = &t;
  if (!spec) {
    std::cerr << "error: unknown table family '" << family << "'\n";
    return 1;
  }
  std::vector<std::vector<Int>> grid;
  for (long n = spec->nmin; n <= nmax; ++n) {
    std::vector<Int> row;
    for (long k = spec->kmin; k <= kmax; ++k) row.push_back(spec->value(n, k));
    grid.push_back(std::move(row));
  }
  if (format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (auto& row : grid) {
      nlohmann::json r = nlohmann::json::array();
      for (auto& v : row) r.push_back(v.str());
      rows.push_back(std::move(r));
    }
    nlohmann::json out{{"family", family}, {"nmin", spec->nmin}, {"kmin", spec->kmin},
                       {"nmax", nmax},     {"kmax", kmax},       {"values", rows}};
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    for (auto& row : grid) {
      for (std::size_t i = 0; i < row.size(); ++i)
        std::cout << (i ? "," : "") << row[i].str();
      std::cout << "\n";
    }
  } else {
    std::size_t width = 1;
    for (auto& row : grid)
      for (auto& v : row) width = std::max(width, v.str().size());
    for (long n = spec->nmin; n <= nmax; ++n) {
      std::cout << "n=" << std::setw(2) << n << " ";
      auto& row = grid[n - spec->nmin];
      for (std::size_t i = 0; i < row.size(); ++i)
        std::cout << " " << std::setw(static_cast<int>(width)) << row[i].str();
      std::cout << "\n";
    }
  }
  return 0;
}

int emit_poly(const std::string& family, long n, long k, const std::string& format) {
  Polynomial p;
  try {
    if (family == "bell") {
      p = facpol::bell::bell(static_cast<int>(n), static_cast<int>(k));
    } else if (family == "abell") {
      facpol::bell::ATable a(static_cast<int>(n));
      p = a.at(static_cast<int>(n), static_cast<int>(k));
    } else if (family == "potential") {
      p = facpol::fac::potential(static_cast<int>(n), k);
    } else if (family == "facl") {
      p = facpol::fac::lower_factorial_direct(static_cast<int>(n), static_cast<int>(k));
    } else if (family == "facu") {
      p = facpol::fac::upper_factorial_direct(static_cast<int>(n), static_cast<int>(k));
    } else {
      std::cerr << "error: unknown polynomial family '" << family << "'\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (format == "json") {
    nlohmann::json out{{"family", family},
                       {"n", n},
                       {"k", k},
                       {"terms", facpol::polynomial_to_json(p)}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << facpol::to_canonical_string(p) << "\n";
  }
  return 0;
}

int run_verify(const std::string& identity, long nmax, long kmax, std::uint64_t seed,
               const std::string& format, long max_n) {
  std::vector<vf::IdentityId> ids;
  if (identity == "all") {
    ids = vf::all_identities();
  } else if (auto id = vf::parse_identity(identity)) {
    ids.push_back(*id);
  } else {
    std::cerr << "error: unknown identity '" << identity << "'; known names:";
    for (auto known : vf::all_identities()) std::cerr << " " << vf::identity_name(known);
    std::cerr << "\n";
    return 1;
  }
  bool all_passed = true;
  nlohmann::json jreports = nlohmann::json::array();
  for (auto id : ids) {
    vf::Range r = vf::default_range(id);
    long nm = nmax >= 0 ? nmax : r.nmax;
    long km = kmax >= 0 ? kmax : r.kmax;
    vf::IdentityReport report;
    try {
      report = vf::run_identity(id, nm, km, seed, max_n);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }
    all_passed = all_passed && report.passed;
    if (format == "json")
      jreports.push_back(vf::report_to_json(report));
    else
      std::cout << vf::report_to_text(report) << "\n";
    std::cerr << vf::identity_name(id) << " took "
              << std::chrono::duration_cast<std::chrono::milliseconds>(report.elapsed).count()
              << " ms\n";
  }
  if (format == "json") std::cout << jreports.dump() << "\n";
  return all_passed ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact tables, polynomial families and identity checks for "
               "partial Bell, potential and factorial polynomials"};
  app.require_subcommand(1);
  long limit = max_n_limit();

  std::string format = "text";
  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
  };

  auto* table = app.add_subcommand("table", "Emit a number-family table");
  add_format(table);
  std::string t_family;
  long t_nmax = 0, t_kmax = -1;
  table->add_option("--family", t_family, "stirling2|stirling1|cycle|lah|lah-unsigned|upper-assoc|lower-assoc")
      ->required();
  table->add_option("--nmax", t_nmax, "Largest row index")->required();
  table->add_option("--kmax", t_kmax, "Largest column index (default: nmax)");

  auto* poly = app.add_subcommand("poly", "Print one polynomial family member");
  add_format(poly);
  std::string p_family;
  long p_n = 0, p_k = 0;
  poly->add_option("--family", p_family, "bell|abell|potential|facl|facu")->required();
  poly->add_option("--n", p_n)->required();
  poly->add_option("--k", p_k, "Column index (may be negative for potential)")->required();

  auto* verify = app.add_subcommand("verify", "Check identities over index ranges");
  add_format(verify);
  std::string v_identity = "all";
  long v_nmax = -1, v_kmax = -1;
  std::uint64_t v_seed = 0;
  verify->add_option("--identity", v_identity, "Identity name or 'all'");
  verify->add_option("--nmax", v_nmax, "Sweep limit (default: per identity)");
  verify->add_option("--kmax", v_kmax, "Sweep limit (default: per identity)");
  verify->add_option("--seed", v_seed, "Seed for the randomized series checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (table->parsed()) {
    if (t_nmax < 0 || t_nmax > limit || t_kmax > limit) {
      std::cerr << "error: table indices must lie in [0, " << limit << "]\n";
      return 1;
    }
    return emit_table(t_family, t_nmax, t_kmax >= 0 ? t_kmax : t_nmax, format);
  }
  if (poly->parsed()) {
    if (p_n < 0 || p_n > limit || p_k > limit || p_k < -limit) {
      std::cerr << "error: polynomial indices must lie in [-" << limit << ", " << limit << "]\n";
      return 1;
    }
    return emit_poly(p_family, p_n, p_k, format);
  }
  return run_verify(v_identity, v_nmax, v_kmax, v_seed, format, limit);
}
