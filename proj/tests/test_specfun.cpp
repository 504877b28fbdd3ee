#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fdde/specfun.hpp"

using namespace fdde;

TEST_CASE("log_gamma matches reference values")
{
    // frozen from mpmath (dps=40)
    CHECK(log_gamma(1.7) == doctest::Approx(-0.095807697407065864527).epsilon(1e-14));
    CHECK(log_gamma(5.0) == doctest::Approx(3.1780538303479456196).epsilon(1e-14));
    CHECK(log_gamma(1.5) == doctest::Approx(-0.12078223763524522235).epsilon(1e-14));
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(log_gamma(2.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
}

TEST_CASE("log_gamma satisfies the recurrence ln Gamma(x+1) = ln Gamma(x) + ln x")
{
    for (double x : {0.3, 0.75, 1.2, 2.5, 7.0, 33.0}) {
        CHECK(log_gamma(x + 1.0) ==
              doctest::Approx(log_gamma(x) + std::log(x)).epsilon(1e-13));
    }
}

TEST_CASE("log_gamma rejects non-positive arguments")
{
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("gamma_fn handles positive values, poles, and reflection")
{
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::acos(-1.0))).epsilon(1e-13));
    CHECK(std::isinf(gamma_fn(0.0)));
    CHECK(std::isinf(gamma_fn(-3.0)));
    // Gamma(-0.5) = -2 sqrt(pi)
    CHECK(gamma_fn(-0.5) ==
          doctest::Approx(-2.0 * std::sqrt(std::acos(-1.0))).epsilon(1e-12));
}

TEST_CASE("mittag_leffler matches reference values in every branch")
{
    // frozen from mpmath (dps >= 40): Taylor window, integral branch, and the
    // large-positive asymptotic branch
    struct Case { double alpha, z, want; };
    const Case cases[] = {
        {0.5, -4.0, 0.13699945762506138989},
        {0.7, -2.0, 0.21378672701529726519},
        {0.7, -5.5, 0.069709218418053282116},
        {0.9, -7.0, 0.020553253921495637885},
        {0.7, -10.0, 0.036173265542309153332},
        {0.3, -12.0, 0.061135915996519420761},
        {0.5, -20.0, 0.028174348741051319319},
        {0.5, -35.0, 0.016113130956815978704},
        {0.7, -35.0, 0.0097720879197626550213},
        {0.7, -50.0, 0.0067936656703830928422},
        {0.7, -100.0, 0.0033696874163059937557},
        {0.5, 2.0, 108.94090438997797241},
    };
    for (const auto& c : cases) {
        CAPTURE(c.alpha);
        CAPTURE(c.z);
        CHECK(mittag_leffler({c.alpha, c.z}) ==
              doctest::Approx(c.want).epsilon(1e-11));
    }
}

TEST_CASE("mittag_leffler basic identities")
{
    CHECK(mittag_leffler({0.6, 0.0}) == 1.0);
    // alpha = 1 collapses to the ordinary exponential
    for (double z : {-20.0, -3.0, 0.5, 4.0}) {
        CHECK(mittag_leffler({1.0, z}) == doctest::Approx(std::exp(z)).epsilon(1e-14));
    }
}

TEST_CASE("mittag_leffler rejects bad parameters")
{
    CHECK_THROWS_AS(mittag_leffler({0.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(mittag_leffler({1.5, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(mittag_leffler({-0.3, 1.0}), std::invalid_argument);
    MLParams bad_tol{0.5, 1.0};
    bad_tol.tol = 0.0;
    CHECK_THROWS_AS(mittag_leffler(bad_tol), std::invalid_argument);
    MLParams bad_terms{0.5, 1.0};
    bad_terms.max_terms = 0;
    CHECK_THROWS_AS(mittag_leffler(bad_terms), std::invalid_argument);
}

TEST_CASE("conformable_exp")
{
    CHECK(conformable_exp(2.0, 0.5, 0.0) == 1.0);
    // alpha = 1 reduces to exp(lambda t)
    CHECK(conformable_exp(-0.7, 1.0, 3.0) == doctest::Approx(std::exp(-2.1)).epsilon(1e-14));
    // direct formula at fractional order
    CHECK(conformable_exp(1.5, 0.5, 4.0) ==
          doctest::Approx(std::exp(1.5 * 2.0 / 0.5)).epsilon(1e-14));
    CHECK_THROWS_AS(conformable_exp(1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(conformable_exp(1.0, 0.5, -1.0), std::invalid_argument);
}
