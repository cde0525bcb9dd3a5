#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "su3cd/catalog.hpp"
#include "su3cd/classify.hpp"
#include "su3cd/congruence.hpp"
#include "su3cd/errors.hpp"
#include "su3cd/normalize.hpp"
#include "su3cd/parallel.hpp"

namespace {

using namespace su3cd;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitVerificationFailure = 2;

GroupSpec require_spec(const std::string& text) {
  const auto spec = parse_spec(text);
  if (!spec) throw std::invalid_argument("cannot parse spec '" + text + "'");
  if (!spec_exists(*spec)) {
    throw std::invalid_argument("no group " + text +
                                ": the defining congruences have no such solution");
  }
  return *spec;
}

void print_entry(const CatalogEntry& e, VerifyLevel level) {
  std::cout << "spec: " << format_spec(e.spec) << '\n'
            << "kind: " << (e.spec.kind == Kind::C ? 'C' : 'D') << '\n'
            << "m: " << e.spec.m << "\nn: " << e.spec.n << "\nk: " << e.spec.k
            << "\nr: " << e.r << '\n'
            << "ell: " << e.ell << '\n';
  if (e.ell_prime) std::cout << "ell_prime: " << *e.ell_prime << '\n';
  std::cout << "order: " << e.order;
  switch (level) {
    case VerifyLevel::None: std::cout << '\n'; break;
    case VerifyLevel::Order: std::cout << " (closure verified)\n"; break;
    case VerifyLevel::Full: std::cout << " (closure and presentation verified)\n"; break;
  }
  std::cout << "series: " << e.series.display << '\n';
  std::cout << "factorization: "
            << (e.factorization ? "Z3 x " + format_spec(*e.factorization) : "none") << '\n';
  std::cout << "isomorphism partner k: ";
  if (e.partner_k) {
    std::cout << *e.partner_k << '\n';
  } else {
    std::cout << "none\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Exact classification and catalog of the type C and D finite "
               "subgroups of SU(3)"};
  app.require_subcommand(1);

  // table1
  auto* table1 = app.add_subcommand("table1", "Admissible r with canonical k values");
  std::uint64_t table1_max = 100;
  bool table1_json = false;
  table1->add_option("--max", table1_max, "Largest r to list")->capture_default_str();
  table1->add_flag("--json", table1_json, "Emit JSON instead of text");
  table1->callback([&] {
    const auto rows = table1_rows(table1_max);
    std::cout << (table1_json ? table1_to_json(rows) : render_table1(rows));
  });

  // solve-k
  auto* solvek = app.add_subcommand("solve-k", "Solve 1 + k + k^2 = 0 (mod r)");
  std::uint64_t solvek_r = 1;
  solvek->add_option("r", solvek_r, "Modulus r")->required();
  solvek->callback([&] {
    const auto ks = solve_k(solvek_r);
    std::cout << "r: " << solvek_r << "\nk:";
    if (ks.empty()) std::cout << " (none)";
    for (const auto k : ks) std::cout << ' ' << k;
    std::cout << "\ncanonical k:";
    const auto canon = canonical_k_values(solvek_r);
    if (canon.empty()) std::cout << " (none)";
    for (const auto k : canon) std::cout << ' ' << k;
    std::cout << '\n';
  });

  // admissible
  auto* adm = app.add_subcommand("admissible", "3^i * (6z+1 primes) decomposition of r");
  std::uint64_t adm_r = 1;
  adm->add_option("r", adm_r, "Modulus r")->required();
  adm->callback([&] {
    const Admissibility a = admissible_r(adm_r);
    std::cout << "r: " << a.r << "\nadmissible: " << (a.admissible ? "yes" : "no") << '\n';
    if (a.admissible) {
      std::cout << "three_exp: " << a.three_exp << "\nq: " << a.q_part
                << "\nq_factors: " << format_factors(a.q_factors) << '\n';
    }
  });

  // build
  auto* build = app.add_subcommand("build", "Construct and verify one group");
  std::string build_spec;
  std::string build_verify;
  build->add_option("spec", build_spec, "Group spec, e.g. C(14,2,2)")->required();
  build->add_option("--verify", build_verify, "none|order|full (default by size)");
  build->callback([&] {
    const GroupSpec spec = require_spec(build_spec);
    VerifyLevel level = spec.order() < 1000 ? VerifyLevel::Full : VerifyLevel::Order;
    if (!build_verify.empty()) {
      const auto parsed = parse_verify_level(build_verify);
      if (!parsed) throw std::invalid_argument("bad --verify level '" + build_verify + "'");
      level = *parsed;
    }
    print_entry(make_catalog_entry(spec, level), level);
  });

  // normalize
  auto* norm = app.add_subcommand("normalize", "Translate legacy C(mu,alpha,beta) or "
                                               "D(mu,alpha,beta;nu,rho,sigma) notation");
  std::string norm_input;
  norm->add_option("legacy", norm_input, "Legacy label")->required();
  norm->callback([&] {
    const auto legacy = parse_legacy(norm_input);
    if (!legacy) throw std::invalid_argument("cannot parse legacy label '" + norm_input + "'");
    if (std::holds_alternative<LegacyC>(*legacy)) {
      const auto& c = std::get<LegacyC>(*legacy);
      const NormalizeResult res = normalize_c(c);
      std::cout << "input: " << format_legacy(c) << '\n'
                << "closure order: " << res.group.order() << '\n'
                << "m: " << res.spec.m << "\nn: " << res.spec.n << "\nr: " << res.spec.r()
                << "\nk: " << res.spec.k << '\n'
                << "spec: " << format_spec(res.spec) << '\n'
                << "series: " << series_label(res.spec).display << '\n'
                << "verification: element-set equality with canonical generators\n";
    } else {
      const auto& d = std::get<LegacyD>(*legacy);
      const NormalizeResult res = normalize_d(d);
      std::cout << "input: " << format_legacy(d) << '\n'
                << "closure order: " << res.group.order() << '\n'
                << "m: " << res.spec.m << "\nn: " << res.spec.n << "\nr: " << res.spec.r()
                << "\nk: " << res.spec.k << '\n'
                << "spec: " << format_spec(res.spec) << '\n'
                << "series: " << series_label(res.spec).display << '\n'
                << "verification: order and fingerprint match the canonical form\n";
    }
  });

  // catalog
  auto* cat = app.add_subcommand("catalog", "Emit the JSON catalog of all groups");
  std::uint64_t cat_max_order = 512;
  std::string cat_out;
  std::string cat_verify;
  cat->add_option("--max-order", cat_max_order, "Largest group order")
      ->required()
      ->check(CLI::Range(std::uint64_t(3), std::uint64_t(10000)));
  cat->add_option("--out", cat_out, "Output file")->required();
  cat->add_option("--verify", cat_verify, "none|order|full (default by size)");
  cat->callback([&] {
    std::optional<VerifyLevel> forced;
    if (!cat_verify.empty()) {
      forced = parse_verify_level(cat_verify);
      if (!forced) throw std::invalid_argument("bad --verify level '" + cat_verify + "'");
    }
    const auto entries = build_catalog(cat_max_order, forced);
    std::ofstream out(cat_out, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot open output file '" + cat_out + "'");
    out << catalog_to_json(entries, cat_max_order);
    out.flush();
    if (!out) throw std::invalid_argument("write failed for '" + cat_out + "'");
    std::cout << "wrote " << entries.size() << " entries to " << cat_out << '\n';
  });

  // isomorphic
  auto* iso = app.add_subcommand("isomorphic", "Decide isomorphism of two groups");
  std::string iso_a, iso_b;
  bool iso_brute = false;
  iso->add_option("spec1", iso_a)->required();
  iso->add_option("spec2", iso_b)->required();
  iso->add_flag("--brute-force", iso_brute, "Also run the exhaustive search");
  iso->callback([&] {
    const GroupSpec a = require_spec(iso_a);
    const GroupSpec b = require_spec(iso_b);
    const bool by_criterion = spec_isomorphic(a, b);
    std::cout << "criterion (same (m,n) and k1=k2 or 1+k1+k2=r): "
              << (by_criterion ? "isomorphic" : "not isomorphic") << '\n';
    if (iso_brute) {
      const auto witness = brute_force_isomorphism(build_group(a), build_group(b));
      std::cout << "brute force: " << (witness ? "witness found" : "no isomorphism") << '\n';
      if (witness.has_value() != by_criterion) {
        throw VerificationError("criterion and brute force disagree for " + iso_a + ", " +
                                iso_b);
      }
    }
  });

  // factorize
  auto* fact = app.add_subcommand("factorize", "Direct-product factorization of a group");
  std::string fact_spec;
  fact->add_option("spec", fact_spec)->required();
  fact->callback([&] {
    const GroupSpec spec = require_spec(fact_spec);
    const auto inner = factorize_spec(spec);
    if (inner) {
      std::cout << format_spec(spec) << " = Z3 x " << format_spec(*inner) << '\n';
    } else {
      std::cout << format_spec(spec) << " does not factorize\n";
    }
  });

  // experiment
  auto* exp = app.add_subcommand("experiment", "Numerical scans");
  std::string exp_which;
  std::uint64_t exp_bound = 0;
  exp->add_option("which", exp_which, "single-gen | theorem4 | multipair")->required();
  exp->add_option("--bound", exp_bound, "Scan bound (defaults: 300 / 10000 / 250)");
  exp->callback([&] {
    if (exp_which == "single-gen") {
      const std::uint64_t bound = exp_bound ? exp_bound : 300;
      const auto results = run_single_generator_scan(bound);
      std::uint64_t failures = 0;
      for (const auto& res : results) {
        if (!res.generator) {
          ++failures;
          std::cout << "FAIL " << format_spec(res.spec) << ": no single diagonal generator\n";
        }
      }
      std::cout << "specs scanned (m <= " << bound << "): " << results.size()
                << "\nfailures: " << failures << '\n';
    } else if (exp_which == "theorem4") {
      const std::uint64_t bound = exp_bound ? exp_bound : 10000;
      std::cout << "joint congruence solvable for r <=" << ' ' << bound << ":";
      for (const auto r : run_theorem4_scan(bound)) std::cout << ' ' << r;
      std::cout << '\n';
    } else if (exp_which == "multipair") {
      const std::uint64_t bound = exp_bound ? exp_bound : 250;
      std::cout << "admissible r <= " << bound << " with >= 2 canonical k:";
      for (const auto r : run_multipair_scan(bound)) std::cout << ' ' << r;
      std::cout << '\n';
    } else {
      throw std::invalid_argument("unknown experiment '" + exp_which + "'");
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const su3cd::VerificationError& e) {
    std::cerr << "internal verification failure: " << e.what() << '\n';
    return kExitVerificationFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
}
