#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "opskit/stats/fisher.hpp"
#include "opskit/stats/scores.hpp"
#include "support/catch_helpers.hpp"

using namespace opskit;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("group means of the published indicator summaries") {
  const stats::AggregateReport tech = stats::aggregate_means(
      {"a", "b", "c", "d", "e", "f", "g"}, {2.1, 2.4, 2.1, 2.56, 2.0, 2.0, 2.8});
  REQUIRE_THAT(tech.group_mean, WithinAbs(2.28, 1e-12));

  const stats::AggregateReport psych = stats::aggregate_means(
      {"a", "b", "c", "d", "e", "f", "g", "h", "i"},
      {2.6, 2.7, 2.5, 2.8, 2.8, 2.6, 2.81, 2.75, 2.75});
  REQUIRE_THAT(psych.group_mean, WithinAbs(2.7011111111111111, 1e-12));
}

TEST_CASE("aggregate_scores averages the raw matrix") {
  SECTION("all zeros stay zero") {
    const stats::ScoreMatrix s({"x", "y"}, {{0, 0}, {0, 0}, {0, 0}});
    const stats::AggregateReport report = stats::aggregate_scores(s);
    REQUIRE(report.indicator_means == std::vector<double>{0.0, 0.0});
    REQUIRE(report.group_mean == 0.0);
  }
  SECTION("hand-checked means and weights") {
    const stats::ScoreMatrix s({"x", "y"}, {{2, 3}, {1, 0}}, {3.0, 1.0});
    const stats::AggregateReport report = stats::aggregate_scores(s);
    REQUIRE(report.indicator_means == std::vector<double>{1.5, 1.5});
    REQUIRE_THAT(report.group_mean, WithinAbs(1.5, 1e-15));

    const stats::ScoreMatrix skew({"x", "y"}, {{3, 0}}, {3.0, 1.0});
    REQUIRE_THAT(stats::aggregate_scores(skew).group_mean, WithinAbs(2.25, 1e-15));
  }
}

TEST_CASE("group mean is invariant under uniform weight scaling") {
  const std::vector<std::string> names = {"a", "b", "c"};
  const std::vector<double> means = {0.5, 2.25, 3.0};
  const std::vector<double> weights = {1.0, 2.0, 0.5};
  const double base = stats::aggregate_means(names, means, weights).group_mean;
  for (double scale : {2.0, 7.5, 0.25}) {
    std::vector<double> scaled = weights;
    for (double& w : scaled) w *= scale;
    REQUIRE_THAT(stats::aggregate_means(names, means, scaled).group_mean,
                 WithinRel(base, 1e-14));
  }
}

TEST_CASE("score validation") {
  REQUIRE(error_code_of([] { stats::ScoreMatrix({"x"}, {{4}}); }) == Errc::ScoreOutOfScale);
  REQUIRE(error_code_of([] { stats::ScoreMatrix({"x"}, {{-1}}); }) == Errc::ScoreOutOfScale);
  REQUIRE(error_code_of([] { stats::ScoreMatrix({"x", "y"}, {{1}}); }) == Errc::RaggedRows);
  REQUIRE(error_code_of([] { stats::ScoreMatrix({"x"}, {}); }) == Errc::EmptyMatrix);
  REQUIRE(error_code_of([] { stats::ScoreMatrix({}, {{1}}); }) == Errc::EmptyMatrix);
  REQUIRE(error_code_of([] { stats::ScoreMatrix({"x"}, {{1}}, {0.0}); }) ==
          Errc::InvalidArgument);
  REQUIRE(error_code_of([] { stats::aggregate_means({"x"}, {3.5}); }) == Errc::ScoreOutOfScale);
  REQUIRE(error_code_of([] { stats::aggregate_means({}, {}); }) == Errc::EmptyMatrix);
}

TEST_CASE("fisher angular test reproduces the reference comparison") {
  const stats::FisherResult r = stats::fisher_angular_test(0.53, 32, 0.33, 60, 0.05);
  REQUIRE_THAT(r.phi1, WithinRel(1.6308323852401752, 1e-12));
  REQUIRE_THAT(r.phi2, WithinRel(1.2238794292677349, 1e-12));
  REQUIRE_THAT(r.phi_emp, WithinRel(1.8590921115222665, 1e-12));
  REQUIRE_THAT(r.phi_crit, WithinAbs(1.6448536269514722, 1e-8));
  REQUIRE(r.significant);
}

TEST_CASE("fisher edge cases") {
  SECTION("equal proportions are never significant") {
    const stats::FisherResult r = stats::fisher_angular_test(0.4, 30, 0.4, 50);
    REQUIRE(r.phi_emp == 0.0);
    REQUIRE_FALSE(r.significant);
  }
  SECTION("maximal separation reaches pi") {
    const stats::FisherResult r = stats::fisher_angular_test(1.0, 2, 0.0, 2);
    REQUIRE_THAT(r.phi_emp, WithinRel(3.141592653589793, 1e-12));
    REQUIRE(r.significant);
  }
  SECTION("swapping the samples preserves phi_emp") {
    const stats::FisherResult a = stats::fisher_angular_test(0.53, 32, 0.33, 60);
    const stats::FisherResult b = stats::fisher_angular_test(0.33, 60, 0.53, 32);
    REQUIRE(a.phi_emp == b.phi_emp);
    REQUIRE(a.significant == b.significant);
  }
  SECTION("validation") {
    REQUIRE(error_code_of([] { stats::fisher_angular_test(1.2, 10, 0.5, 10); }) ==
            Errc::InvalidProportion);
    REQUIRE(error_code_of([] { stats::fisher_angular_test(-0.1, 10, 0.5, 10); }) ==
            Errc::InvalidProportion);
    REQUIRE(error_code_of([] { stats::fisher_angular_test(0.5, 0, 0.5, 10); }) ==
            Errc::InvalidArgument);
    REQUIRE(error_code_of([] { stats::fisher_angular_test(0.5, 10, 0.5, 10, 0.0); }) ==
            Errc::InvalidAlpha);
  }
}
