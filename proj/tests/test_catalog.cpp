#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "su3cd/catalog.hpp"

using namespace su3cd;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open ", path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string cmd = std::string(SU3CD_CLI_PATH) + " " + args + " 2>&1";
  CommandResult res;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

}  // namespace

TEST_CASE("table1 rows reproduce the r < 100 table") {
  const auto rows = table1_rows(100);
  REQUIRE(rows.size() == 19);

  // (r, factors, canonical k) triplets of the known table
  struct Expected {
    std::uint64_t r;
    std::string factors;
    std::vector<std::uint64_t> k;
  };
  const std::vector<Expected> expected{
      {1, "1", {0}},      {3, "3", {1}},      {7, "7", {2}},       {13, "13", {3}},
      {19, "19", {7}},    {21, "3*7", {4}},   {31, "31", {5}},     {37, "37", {10}},
      {39, "3*13", {16}}, {43, "43", {6}},    {49, "7^2", {18}},   {57, "3*19", {7}},
      {61, "61", {13}},   {67, "67", {29}},   {73, "73", {8}},     {79, "79", {23}},
      {91, "7*13", {9, 16}}, {93, "3*31", {25}}, {97, "97", {35}},
  };
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].r == expected[i].r);
    CHECK(format_factors(rows[i].factors) == expected[i].factors);
    CHECK(rows[i].canonical_k == expected[i].k);
  }
}

TEST_CASE("table1 text rendering matches the golden file") {
  const std::string rendered = render_table1(table1_rows(100));
  CHECK(rendered == read_file(std::string(SU3CD_GOLDEN_DIR) + "/table1_max100.txt"));
}

TEST_CASE("table1 edge cases") {
  const auto rows = table1_rows(3);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].r == 1);
  CHECK(rows[0].canonical_k == std::vector<std::uint64_t>{0});
  CHECK(rows[1].r == 3);
  CHECK(rows[1].canonical_k == std::vector<std::uint64_t>{1});

  const auto json = nlohmann::json::parse(table1_to_json(table1_rows(91)));
  CHECK(json.back()["r"] == 91);
  CHECK(json.back()["k"] == std::vector<std::uint64_t>{9, 16});
}

TEST_CASE("catalog entries carry consistent classification data") {
  const auto entries = build_catalog(162, VerifyLevel::Full);
  bool found_d931 = false;
  bool found_delta12 = false;
  for (const auto& e : entries) {
    CHECK(e.order == e.spec.order());
    CHECK(e.r == e.spec.m / e.spec.n);
    if (e.spec == GroupSpec{Kind::D, 9, 3, 1}) {
      found_d931 = true;
      CHECK(e.order == 162);
      CHECK(e.ell_prime == 1);
    }
    if (e.spec == GroupSpec{Kind::C, 2, 2, 0}) {
      found_delta12 = true;
      CHECK(e.series.display == "Delta(12)");
    }
  }
  CHECK(found_d931);
  CHECK(found_delta12);

  CHECK(build_catalog(6).size() == 2);
}

TEST_CASE("catalog JSON is deterministic and carries the full schema") {
  const auto entries = build_catalog(100, VerifyLevel::Full);
  const std::string a = catalog_to_json(entries, 100);
  const std::string b = catalog_to_json(build_catalog(100, VerifyLevel::Full), 100);
  CHECK(a == b);
  // worker-pool width must not affect the output
  CHECK(catalog_to_json(build_catalog(100, VerifyLevel::Full, 1), 100) == a);
  CHECK(catalog_to_json(build_catalog(100, VerifyLevel::Full, 3), 100) == a);

  const auto json = nlohmann::json::parse(a);
  CHECK(json["schema_version"] == 1);
  CHECK(json["max_order"] == 100);
  bool found = false;
  for (const auto& e : json["entries"]) {
    if (e["spec"] == "C(21,1,4)") {
      found = true;
      CHECK(e["kind"] == "C");
      CHECK(e["m"] == 21);
      CHECK(e["n"] == 1);
      CHECK(e["k"] == 4);
      CHECK(e["r"] == 21);
      CHECK(e["ell"] == 1);
      CHECK(e["ell_prime"].is_null());
      CHECK(e["order"] == 63);
      CHECK(e["series_label"] == "Z3 x C(7n,n)^(4)");
      CHECK(e["factorization"] == "C(7,1,4)");
      CHECK(e["isomorphism_partner_k"] == 16);
    }
  }
  CHECK(found);
}

TEST_CASE("partner k is null exactly when k pairs with itself") {
  const auto entries = build_catalog(24, VerifyLevel::None);
  for (const auto& e : entries) {
    if (e.r <= 3) {
      CHECK_FALSE(e.partner_k.has_value());
    } else {
      CHECK(e.partner_k == e.r - 1 - e.spec.k);
    }
  }
}

TEST_CASE("verify levels") {
  CHECK(parse_verify_level("none") == VerifyLevel::None);
  CHECK(parse_verify_level("order") == VerifyLevel::Order);
  CHECK(parse_verify_level("full") == VerifyLevel::Full);
  CHECK_FALSE(parse_verify_level("everything").has_value());
  CHECK_NOTHROW(make_catalog_entry({Kind::C, 14, 2, 2}, VerifyLevel::Full));
  CHECK_THROWS_AS(make_catalog_entry({Kind::C, 5, 1, 1}, VerifyLevel::None),
                  std::invalid_argument);
}

TEST_CASE("theorem-4 scan finds only r = 1 and r = 3") {
  CHECK(run_theorem4_scan(1000) == std::vector<std::uint64_t>{1, 3});
}

TEST_CASE("multi-pair scan below 250") {
  CHECK(run_multipair_scan(250) == std::vector<std::uint64_t>{91, 133, 217, 247});
  CHECK(run_multipair_scan(100) == std::vector<std::uint64_t>{91});
  CHECK(run_multipair_scan(90).empty());
}

TEST_CASE("CLI subcommands and exit codes") {
  // 0 on success
  CHECK(run_cli("solve-k 91").exit_code == 0);
  CHECK(run_cli("solve-k 91").output == "r: 91\nk: 9 16 74 81\ncanonical k: 9 16\n");
  CHECK(run_cli("admissible 21").output ==
        "r: 21\nadmissible: yes\nthree_exp: 1\nq: 7\nq_factors: 7\n");
  CHECK(run_cli("admissible 9").output == "r: 9\nadmissible: no\n");
  CHECK(run_cli("factorize 'D(6,2,1)'").output == "D(6,2,1) = Z3 x D(2,2,0)\n");
  CHECK(run_cli("factorize 'D(9,3,1)'").output == "D(9,3,1) does not factorize\n");
  CHECK(run_cli("experiment multipair --bound 100").output ==
        "admissible r <= 100 with >= 2 canonical k: 91\n");

  const CommandResult iso = run_cli("isomorphic 'C(7,1,2)' 'C(7,1,4)' --brute-force");
  CHECK(iso.exit_code == 0);
  CHECK(iso.output.find("isomorphic") != std::string::npos);
  CHECK(iso.output.find("witness found") != std::string::npos);

  // 1 on invalid user input
  CHECK(run_cli("build 'C(5,1,1)'").exit_code == 1);      // nonexistent group
  CHECK(run_cli("build 'C(5,1'").exit_code == 1);         // bad syntax
  CHECK(run_cli("normalize 'C(28,28,0)'").exit_code == 1);
  CHECK(run_cli("catalog --max-order 4 --out /nonexistent-dir/x.json").exit_code == 1);
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("experiment frobnicate").exit_code == 1);

  // build respects --verify levels
  CHECK(run_cli("build 'D(9,3,1)' --verify none").exit_code == 0);
  CHECK(run_cli("build 'D(9,3,1)' --verify order").exit_code == 0);
  CHECK(run_cli("build 'D(9,3,1)' --verify nonsense").exit_code == 1);
}

TEST_CASE("single-generator scan at a small bound") {
  const auto results = run_single_generator_scan(30);
  CHECK(!results.empty());
  for (const auto& res : results) {
    CHECK(res.spec.m <= 30);
    REQUIRE_MESSAGE(res.generator.has_value(), "no single generator for ",
                    format_spec(res.spec));
  }
  // deterministic ordering and content
  const auto again = run_single_generator_scan(30);
  REQUIRE(again.size() == results.size());
  for (std::size_t i = 0; i < results.size(); ++i) {
    CHECK(again[i].spec == results[i].spec);
    CHECK(again[i].generator == results[i].generator);
  }
}
