#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "gammacop/copulas.hpp"
#include "gammacop/errors.hpp"
#include "gammacop/validation.hpp"

using namespace gammacop;

namespace {

AffineModel bb10() { return AffineModel(AffinePolynomial(2, {1, 1, 1, 0.5}), ShapeParams{1.0, {2.0, 3.0}}); }

const CheckEntry* find(const ValidationReport& r, const std::string& name) {
  for (const auto& e : r.checks)
    if (e.name == name) return &e;
  return nullptr;
}

}  // namespace

TEST_CASE("report bookkeeping") {
  ValidationReport r;
  CheckEntry ok{"divisibility", 0.0, 0.0, 1e-12};
  ok.pass = true;
  r.add(ok);
  CHECK(r.overall);
  CheckEntry bad{"copula_margins", 0.0, 1.0, 1e-15};
  r.add(bad);
  CHECK_FALSE(r.overall);
  r.skip("tau_monte_carlo", "not requested");
  CHECK(r.checks.back().skipped);
  CHECK_THROWS_AS(r.add(CheckEntry{"made_up_check"}), ConsistencyError);
  std::set<std::string> names;
  for (const auto& info : check_registry()) {
    CHECK(names.insert(info.name).second);
    CHECK_FALSE(info.covers.empty());
  }
}

TEST_CASE("appendix identities") {
  CHECK(hladik_pair_check(1.5, 0.0, 3.0, 1e-10).pass);
  CHECK(hladik_pair_check(2.0, 20.0, 1.0, 1e-6).pass);
  CHECK(beta_series_check(2.0, 3.0, 0.0, 1e-10).pass);
  CHECK(beta_series_check(2.0, 3.0, -4.0, 1e-9).pass);
}

TEST_CASE("basis identity and Laplace helpers") {
  const AffineModel m = bb10();
  const double th[] = {0.3, 0.8};
  CHECK(basis_identity_residual(m.poly, th) < 1e-13);
  CHECK(model_laplace_transform(m, th) ==
        doctest::Approx(std::pow(1 + 0.3 + 0.8 + 0.5 * 0.24, -1.0) * std::pow(1.3, -1.0) * std::pow(1.8, -2.0)));
  const double v[] = {0.4, 0.7};
  CHECK(laplace_composition(m, v) == doctest::Approx(copula_cdf(CopulaModel::build(m), v)).epsilon(1e-13));
  const Box b = marginal_box(m, 1e-10);
  CHECK(b.hi[0] > b.hi.size());
}

TEST_CASE("finite-difference helpers") {
  const CopulaModel c = CopulaModel::build(bb10());
  CHECK(fd_copula_partial1(c, 0.3, 0.6) == doctest::Approx(conditional_cdf(c, 0.3, 0.6)).epsilon(1e-8));
  const double v[] = {0.3, 0.6};
  CHECK(fd_copula_mixed2(c, 0.3, 0.6) == doctest::Approx(copula_pdf2(c, v)).epsilon(1e-6));
}

TEST_CASE("full validation of a divisible model passes") {
  const ValidationReport r = run_full_validation(bb10());
  CHECK(r.overall);
  REQUIRE(find(r, "tau_monte_carlo"));
  CHECK(find(r, "tau_monte_carlo")->skipped);
  CHECK(find(r, "copula_pdf_fd")->pass);
  for (const auto& e : r.checks) CHECK_MESSAGE((e.pass || e.skipped), e.name);
}

TEST_CASE("non-divisible model fails and skips gated checks") {
  const AffineModel bad(AffinePolynomial(2, {1, 1, 1, 2.0}), ShapeParams::uniform(1.5, 2));
  const ValidationReport r = run_full_validation(bad);
  CHECK_FALSE(r.overall);
  CHECK_FALSE(find(r, "divisibility")->pass);
  CHECK(find(r, "copula_margins")->skipped);
  CHECK(find(r, "hladik_pair")->pass);
}
