#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "su3cd/classify.hpp"

namespace su3cd {

enum class VerifyLevel { None, Order, Full };

std::optional<VerifyLevel> parse_verify_level(std::string_view text);

/// One catalog row; all fields are recomputed from the spec and re-verified
/// before emission.
struct CatalogEntry {
  GroupSpec spec;
  std::uint64_t r = 1;
  std::uint64_t ell = 1;
  std::optional<std::uint64_t> ell_prime;
  std::uint64_t order = 0;
  SeriesDescriptor series;
  std::optional<GroupSpec> factorization;        // inner factor of Z3 x inner
  std::optional<std::uint64_t> partner_k;        // r-1-k when it differs from k
};

CatalogEntry make_catalog_entry(const GroupSpec& spec, VerifyLevel level);

/// Entries for every canonical spec of order <= max_order, sorted. Forced
/// verify level applies to all entries; by default entries of order < 1000
/// get Full and larger ones Order. Verification fans out over a worker pool;
/// the output order is deterministic.
std::vector<CatalogEntry> build_catalog(std::uint64_t max_order,
                                        std::optional<VerifyLevel> forced = std::nullopt,
                                        unsigned threads = 0);

/// Single JSON document with a schema_version field; byte-deterministic.
std::string catalog_to_json(const std::vector<CatalogEntry>& entries,
                            std::uint64_t max_order);

struct Table1Row {
  std::uint64_t r;
  std::vector<std::pair<std::uint64_t, int>> factors;
  std::vector<std::uint64_t> canonical_k;
};

std::vector<Table1Row> table1_rows(std::uint64_t max_r);
std::string format_factors(const std::vector<std::pair<std::uint64_t, int>>& factors);
/// One line per row: "r=R factors=F k=K1,K2".
std::string render_table1(const std::vector<Table1Row>& rows);
std::string table1_to_json(const std::vector<Table1Row>& rows);

struct SingleGenResult {
  GroupSpec spec;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> generator;
};

/// Scans every canonical spec with m <= max_m for a diagonal element that,
/// together with E (and B), generates the whole group.
std::vector<SingleGenResult> run_single_generator_scan(std::uint64_t max_m,
                                                       unsigned threads = 0);

/// r <= max_r for which the two congruences 1+k+k^2 = 0 and 1+2k = 0 (mod r)
/// have a joint solution.
std::vector<std::uint64_t> run_theorem4_scan(std::uint64_t max_r);

/// Admissible r <= max_r with at least two canonical k values.
std::vector<std::uint64_t> run_multipair_scan(std::uint64_t max_r);

}  // namespace su3cd
