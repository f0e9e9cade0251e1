#include "heisym/algebra_io.hpp"
#include "heisym/report.hpp"
#include "heisym/scenarios.hpp"

#include <doctest.h>

#include <set>

using namespace heisym;

TEST_CASE("rational parsing and printing") {
  CHECK(rational_to_string(Rational(3, 2)) == "3/2");
  CHECK(rational_to_string(Rational(-4, 6)) == "-2/3");
  CHECK(rational_to_string(Rational(5)) == "5");

  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_FALSE(parse_rational("1.5"));
  CHECK_FALSE(parse_rational(""));
  CHECK_FALSE(parse_rational("3/0"));
  CHECK_FALSE(parse_rational("0x10"));
  CHECK_FALSE(parse_rational(" 1"));
}

TEST_CASE("rational square roots") {
  CHECK(rational_sqrt(Rational(9, 4)) == Rational(3, 2));
  CHECK(rational_sqrt(Rational(0)) == Rational(0));
  CHECK_FALSE(rational_sqrt(Rational(2)));
  CHECK_FALSE(rational_sqrt(Rational(-1)));
}

TEST_CASE("algebra JSON round trip") {
  for (const LieAlgebra& L : {heisenberg(1), heisenberg(2), filiform_l5()}) {
    AlgebraFileResult loaded = load_algebra_json(algebra_to_json(L), L.name());
    REQUIRE(loaded.algebra);
    CHECK(loaded.format_errors.empty());
    CHECK(loaded.validation_errors.empty());
    CHECK(loaded.algebra->dim() == L.dim());
    for (std::size_t i = 0; i < L.dim(); ++i)
      for (std::size_t j = 0; j < L.dim(); ++j)
        CHECK(loaded.algebra->basis_bracket(i, j) == L.basis_bracket(i, j));
    CHECK(loaded.algebra->center() == L.center());
  }
}

TEST_CASE("loader rejects malformed input") {
  CHECK_FALSE(load_algebra_json("{not json", "x").format_errors.empty());
  CHECK_FALSE(load_algebra_json("{\"brackets\": []}", "x").format_errors.empty());
  CHECK_FALSE(load_algebra_json("{\"dim\": 0}", "x").format_errors.empty());
  CHECK_FALSE(load_algebra_json(
                  R"({"dim": 2, "brackets": [{"i": 1, "j": 1, "coeffs": []}]})", "x")
                  .format_errors.empty());
  CHECK_FALSE(load_algebra_json(
                  R"({"dim": 2, "brackets": [{"i": 1, "j": 2, "coeffs": [[1, "0.5"]]}]})",
                  "x")
                  .format_errors.empty());
}

TEST_CASE("loader rejects inconsistent and non-Lie tensors") {
  // Both orientations listed with the same sign: antisymmetry fails.
  auto not_antisym = load_algebra_json(
      R"({"dim": 3, "brackets": [
            {"i": 1, "j": 2, "coeffs": [[3, "1"]]},
            {"i": 2, "j": 1, "coeffs": [[3, "1"]]}]})",
      "x");
  CHECK(not_antisym.format_errors.empty());
  CHECK_FALSE(not_antisym.validation_errors.empty());
  CHECK_FALSE(not_antisym.algebra);

  // [X1,X2] = X3, [X1,X3] = X1 violates the Jacobi identity.
  auto not_jacobi = load_algebra_json(
      R"({"dim": 3, "brackets": [
            {"i": 1, "j": 2, "coeffs": [[3, "1"]]},
            {"i": 1, "j": 3, "coeffs": [[1, "1"]]}]})",
      "x");
  CHECK(not_jacobi.format_errors.empty());
  CHECK_FALSE(not_jacobi.validation_errors.empty());
}

TEST_CASE("report status and JSON schema") {
  Report r;
  r.scenario = "demo";
  r.expect_true("works", true);
  CHECK(r.status() == ReportStatus::Pass);
  r.expect_eq("compares", "1", "2");
  CHECK(r.status() == ReportStatus::Fail);

  std::string json = report_to_json(r);
  CHECK(json.find("\"scenario\": \"demo\"") != std::string::npos);
  CHECK(json.find("\"status\": \"fail\"") != std::string::npos);
  CHECK(json.find("\"elapsed_ms\": 0") != std::string::npos);
  CHECK(json.find("\"expected\": \"1\"") != std::string::npos);
}

TEST_CASE("scenario registry") {
  const auto& registry = scenario_registry();
  CHECK(registry.size() >= 13);
  std::set<std::string> names;
  for (const auto& s : registry) {
    CHECK(names.insert(s.name).second);  // unique
    CHECK_FALSE(s.description.empty());
    CHECK_FALSE(s.claim.empty());
  }
  for (const char* required :
       {"h3-involutions", "h3-subgroups", "h3-z22-grading", "h3-symmetric-no-metric",
        "h3-symmetric-center-metric", "h3-riemannian-normal-form", "h3-lorentzian-case1",
        "h3-lorentzian-case2", "h2p1-gradings", "h2p1-metric-existence",
        "h2p1-flat-connections", "l5-connection", "sigma3-example"})
    CHECK(find_scenario(required) != nullptr);
  CHECK(find_scenario("unknown") == nullptr);
}

TEST_CASE("reports are reproducible for a fixed seed") {
  const Scenario* s = find_scenario("h3-involutions");
  REQUIRE(s);
  ScenarioContext ctx{12345};
  Report a = s->run(ctx);
  Report b = s->run(ctx);
  CHECK(report_to_json(a) == report_to_json(b));
  ScenarioContext other{999};
  CHECK(s->run(other).status() == ReportStatus::Pass);
}
