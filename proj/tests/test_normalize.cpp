#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "su3cd/classify.hpp"
#include "su3cd/normalize.hpp"

using namespace su3cd;

TEST_CASE("legacy display syntax round-trips") {
  CHECK(format_legacy(LegacyC{28, 4, 22}) == "C(28,4,22)");
  CHECK(format_legacy(LegacyD{9, 1, 1, 2, 1, 1}) == "D(9,1,1;2,1,1)");

  const auto c = parse_legacy("C(28,4,22)");
  REQUIRE(c.has_value());
  REQUIRE(std::holds_alternative<LegacyC>(*c));
  CHECK(std::get<LegacyC>(*c).mu == 28);
  CHECK(std::get<LegacyC>(*c).alpha == 4);
  CHECK(std::get<LegacyC>(*c).beta == 22);

  const auto d = parse_legacy("D(2,0,1;2,0,1)");
  REQUIRE(d.has_value());
  REQUIRE(std::holds_alternative<LegacyD>(*d));
  CHECK(std::get<LegacyD>(*d).nu == 2);
  CHECK(std::get<LegacyD>(*d).sigma == 1);

  CHECK_FALSE(parse_legacy("C(28,4)").has_value());
  CHECK_FALSE(parse_legacy("D(1,0,0)").has_value());
  CHECK_FALSE(parse_legacy("C(28,4,22;1,0,0)").has_value());
  CHECK_FALSE(parse_legacy("E(1,0,0)").has_value());
}

TEST_CASE("legacy range validation") {
  CHECK_THROWS_AS(normalize_c({28, 28, 0}), std::invalid_argument);
  CHECK_THROWS_AS(normalize_c({0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(normalize_d({9, 1, 1, 2, 2, 0}), std::invalid_argument);
}

TEST_CASE("worked example: C(28,4,22) is the group (m,n,k) = (14,2,2)") {
  const NormalizeResult res = normalize_c({28, 4, 22});
  CHECK(res.spec == GroupSpec{Kind::C, 14, 2, 2});
  CHECK(res.spec.r() == 7);
  CHECK(res.group.order() == 84);

  // the same matrices, element for element, as the canonical generators close to
  const FiniteMatrixGroup canonical = build_group(res.spec);
  CHECK(canonical.same_element_set(res.group));

  // ord(F(28,4,22)) = 14 pins m
  CHECK(make_f_legacy(28, 4, 22).order() == 14);
}

TEST_CASE("k is independent of the witness element") {
  const FiniteMatrixGroup full = closure({make_e(), make_f_legacy(28, 4, 22)});
  const FiniteMatrixGroup a = diagonal_subgroup(full);
  const std::uint32_t step = full.modulus() / 14;  // eps = zeta^step, m = 14
  int witnesses = 0;
  for (const auto& e : a.elements()) {
    if (e.phase(0) != step) continue;
    ++witnesses;
    CHECK((e.phase(1) / step) % 7 == 2);  // a mod r is always k = 2
  }
  CHECK(witnesses == 2);  // the n = 2 candidates F1 and F1*G
}

TEST_CASE("further C translations") {
  // F = diag(w, w^2, 1): the diagonal subgroup grows to all of Z3 x Z3
  const NormalizeResult res312 = normalize_c({3, 1, 2});
  CHECK(res312.spec == GroupSpec{Kind::C, 3, 3, 0});
  CHECK(res312.group.order() == 27);

  // trivial F: the group is just the cyclic permutation group
  const NormalizeResult res1 = normalize_c({1, 0, 0});
  CHECK(res1.spec == GroupSpec{Kind::C, 1, 1, 0});
  CHECK(res1.group.order() == 3);
}

TEST_CASE("order law 3mn holds on randomized legacy inputs") {
  std::mt19937 rng(2718);
  std::uniform_int_distribution<std::uint64_t> pick_mu(1, 40);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint64_t mu = pick_mu(rng);
    std::uniform_int_distribution<std::uint64_t> pick(0, mu - 1);
    const LegacyC legacy{mu, pick(rng), pick(rng)};
    // normalize_c verifies set equality with the canonical closure internally
    const NormalizeResult res = normalize_c(legacy);
    CHECK(res.group.order() == 3 * res.spec.m * res.spec.n);
    CHECK(spec_exists(res.spec));
  }
}

TEST_CASE("normalization is idempotent on canonical generator sets") {
  for (const auto& spec : enumerate_specs(200)) {
    const GroupSpec again = spec_from_full_group(build_group(spec), spec.kind);
    CHECK(canonical_spec(again) == spec);
    CHECK(again == spec);  // the canonical basis reproduces k exactly
  }
}

TEST_CASE("type D translations") {
  // nu = 1 still forces the -1 entry, so sign matrices appear downstream.
  const NormalizeResult d1 = normalize_d({1, 0, 0, 1, 0, 0});
  CHECK(d1.spec == GroupSpec{Kind::D, 2, 2, 0});
  CHECK(d1.group.order() == 24);
  CHECK(series_label(d1.spec).display == "Delta(24)");

  const NormalizeResult d2 = normalize_d({2, 0, 1, 2, 0, 1});
  CHECK(d2.spec == GroupSpec{Kind::D, 2, 2, 0});
  CHECK(d2.group.order() == 24);

  // R(2,1,1) coincides with B, so this legacy input hits the canonical basis.
  const NormalizeResult d3 = normalize_d({9, 1, 1, 2, 1, 1});
  CHECK(d3.spec == GroupSpec{Kind::D, 9, 3, 1});
  CHECK(d3.group.order() == 162);
  CHECK(d3.group.same_element_set(build_group(d3.spec)));
  CHECK(fingerprint(d3.group) == fingerprint(build_group(d3.spec)));
}

TEST_CASE("type D closures satisfy the 6mn order law") {
  std::mt19937 rng(31415);
  std::uniform_int_distribution<std::uint64_t> pick_mu(1, 9);
  std::uniform_int_distribution<std::uint64_t> pick_nu(1, 6);
  for (int trial = 0; trial < 15; ++trial) {
    const std::uint64_t mu = pick_mu(rng);
    const std::uint64_t nu = pick_nu(rng);
    std::uniform_int_distribution<std::uint64_t> pa(0, mu - 1);
    std::uniform_int_distribution<std::uint64_t> pr(0, nu - 1);
    const LegacyD legacy{mu, pa(rng), pa(rng), nu, pr(rng), pr(rng)};
    const NormalizeResult res = normalize_d(legacy, 200'000);
    CHECK(res.group.order() == 6 * res.spec.m * res.spec.n);
    CHECK(spec_exists(res.spec));
  }
}
