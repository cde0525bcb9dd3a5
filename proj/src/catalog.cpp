#include "su3cd/catalog.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "su3cd/congruence.hpp"
#include "su3cd/parallel.hpp"

namespace su3cd {

std::optional<VerifyLevel> parse_verify_level(std::string_view text) {
  if (text == "none") return VerifyLevel::None;
  if (text == "order") return VerifyLevel::Order;
  if (text == "full") return VerifyLevel::Full;
  return std::nullopt;
}

CatalogEntry make_catalog_entry(const GroupSpec& spec, VerifyLevel level) {
  CatalogEntry e;
  e.spec = spec;
  e.r = spec.r();
  const DerivedParams dp = derived_params(spec);
  e.ell = dp.ell;
  e.ell_prime = dp.ell_prime;
  e.order = spec.order();
  e.series = series_label(spec);
  e.factorization = factorize_spec(spec);
  const std::uint64_t partner = e.r - 1 - spec.k;
  if (partner != spec.k) e.partner_k = partner;

  if (level != VerifyLevel::None) {
    build_group(spec);  // throws VerificationError on order mismatch
    if (level == VerifyLevel::Full) {
      std::string relation;
      if (!check_presentation(spec, &relation)) {
        throw VerificationError("catalog: presentation relation failed for " +
                                format_spec(spec) + ": " + relation);
      }
    }
  }
  return e;
}

std::vector<CatalogEntry> build_catalog(std::uint64_t max_order,
                                        std::optional<VerifyLevel> forced,
                                        unsigned threads) {
  const std::vector<GroupSpec> specs = enumerate_specs(max_order);
  std::vector<CatalogEntry> entries(specs.size());
  parallel_for(specs.size(), threads, [&](std::size_t i) {
    const VerifyLevel level =
        forced.value_or(specs[i].order() < 1000 ? VerifyLevel::Full : VerifyLevel::Order);
    entries[i] = make_catalog_entry(specs[i], level);
  });
  return entries;
}

std::string catalog_to_json(const std::vector<CatalogEntry>& entries,
                            std::uint64_t max_order) {
  nlohmann::ordered_json root;
  root["schema_version"] = 1;
  root["max_order"] = max_order;
  auto& arr = root["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["spec"] = format_spec(e.spec);
    j["kind"] = e.spec.kind == Kind::C ? "C" : "D";
    j["m"] = e.spec.m;
    j["n"] = e.spec.n;
    j["k"] = e.spec.k;
    j["r"] = e.r;
    j["ell"] = e.ell;
    if (e.ell_prime) {
      j["ell_prime"] = *e.ell_prime;
    } else {
      j["ell_prime"] = nullptr;
    }
    j["order"] = e.order;
    j["series_label"] = e.series.display;
    if (e.factorization) {
      j["factorization"] = format_spec(*e.factorization);
    } else {
      j["factorization"] = nullptr;
    }
    if (e.partner_k) {
      j["isomorphism_partner_k"] = *e.partner_k;
    } else {
      j["isomorphism_partner_k"] = nullptr;
    }
    arr.push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

std::vector<Table1Row> table1_rows(std::uint64_t max_r) {
  std::vector<Table1Row> rows;
  for (const auto& [r, ks] : admissible_r_list(max_r)) {
    (void)ks;
    rows.push_back({r, factorize(r), canonical_k_values(r)});
  }
  return rows;
}

std::string format_factors(const std::vector<std::pair<std::uint64_t, int>>& factors) {
  if (factors.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, e] : factors) {
    if (!first) os << '*';
    first = false;
    os << p;
    if (e > 1) os << '^' << e;
  }
  return os.str();
}

std::string render_table1(const std::vector<Table1Row>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    os << "r=" << row.r << " factors=" << format_factors(row.factors) << " k=";
    for (std::size_t i = 0; i < row.canonical_k.size(); ++i) {
      if (i) os << ',';
      os << row.canonical_k[i];
    }
    os << '\n';
  }
  return os.str();
}

std::string table1_to_json(const std::vector<Table1Row>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : rows) {
    nlohmann::ordered_json j;
    j["r"] = row.r;
    j["factors"] = format_factors(row.factors);
    j["k"] = row.canonical_k;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<SingleGenResult> run_single_generator_scan(std::uint64_t max_m,
                                                       unsigned threads) {
  std::vector<GroupSpec> specs;
  for (const auto& [r, ks] : admissible_r_list(max_m)) {
    (void)ks;
    for (const std::uint64_t k : canonical_k_values(r)) {
      for (std::uint64_t n = 1; r * n <= max_m; ++n) {
        specs.push_back(GroupSpec{Kind::C, r * n, n, k});
      }
    }
  }
  for (const auto& [r, k] : {std::pair<std::uint64_t, std::uint64_t>{1, 0}, {3, 1}}) {
    for (std::uint64_t n = 1; r * n <= max_m; ++n) {
      specs.push_back(GroupSpec{Kind::D, r * n, n, k});
    }
  }
  std::sort(specs.begin(), specs.end(), [](const GroupSpec& a, const GroupSpec& b) {
    return std::tuple(a.m, a.kind, a.n, a.k) < std::tuple(b.m, b.kind, b.n, b.k);
  });

  std::vector<SingleGenResult> results(specs.size());
  parallel_for(specs.size(), threads, [&](std::size_t i) {
    results[i] = {specs[i], single_diagonal_generator(specs[i])};
  });
  return results;
}

std::vector<std::uint64_t> run_theorem4_scan(std::uint64_t max_r) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 1; r <= max_r; ++r) {
    if (!solve_k_joint(r).empty()) out.push_back(r);
  }
  return out;
}

std::vector<std::uint64_t> run_multipair_scan(std::uint64_t max_r) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 1; r <= max_r; ++r) {
    if (!admissible_r(r).admissible) continue;
    if (canonical_k_values(r).size() >= 2) out.push_back(r);
  }
  return out;
}

}  // namespace su3cd
