#include <cmath>

#include "doctest.h"
#include "dsq/cmatrix.hpp"
#include "dsq/quadrature.hpp"
#include "dsq/special.hpp"

using namespace dsq;

TEST_CASE("gamma_fn reference values") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-12));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-12));
    CHECK_THROWS_AS(gamma_fn(0.0), DomainError);
    CHECK_THROWS_AS(gamma_fn(-1.3), DomainError);
}

TEST_CASE("hyp2f1 reference values") {
    CHECK(hyp2f1(0.3, 1.7, 2.9, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    // 2F1(1,1;2;z) = -ln(1-z)/z
    CHECK(hyp2f1(1.0, 1.0, 2.0, -1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-10));
    // 2F1(a,b;b;z) = (1-z)^{-a}
    CHECK(hyp2f1(2.0, 3.0, 3.0, -1.0) == doctest::Approx(0.25).epsilon(1e-10));
    CHECK_THROWS_AS(hyp2f1(1.0, 1.0, 0.0, -0.5), DomainError);
    CHECK_THROWS_AS(hyp2f1(1.0, 1.0, -2.0, -0.5), DomainError);
    CHECK_THROWS_AS(hyp2f1(1.0, 1.0, 2.0, 0.5), DomainError);
}

TEST_CASE("hyp2f1 against the Euler integral representation") {
    // 2F1(a,b;c;z) = 1/B(b, c-b) int_0^1 t^{b-1}(1-t)^{c-b-1}(1-zt)^{-a} dt
    auto euler = [](double a, double b, double c, double z) {
        const double norm = gamma_fn(c) / (gamma_fn(b) * gamma_fn(c - b));
        return norm * integrate(
                          [=](double t) {
                              return std::pow(t, b - 1.0) * std::pow(1.0 - t, c - b - 1.0) *
                                     std::pow(1.0 - z * t, -a);
                          },
                          0.0, 1.0);
    };
    // Integer b - 1 and c - b - 1 keep the integrand analytic on [0, 1], so
    // the quadrature reference is itself accurate.
    for (double z : {-1.0, -0.7, -0.3, -0.1}) {
        CHECK(hyp2f1(0.8, 2.0, 5.0, z) == doctest::Approx(euler(0.8, 2.0, 5.0, z)).epsilon(1e-9));
        CHECK(hyp2f1(1.5, 3.0, 6.0, z) == doctest::Approx(euler(1.5, 3.0, 6.0, z)).epsilon(1e-9));
    }
}

TEST_CASE("quadrature basics") {
    CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-13));
    CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) ==
          doctest::Approx(2.0).epsilon(1e-12));
    // Oscillatory: int_0^T e^{-x} cos(40x) dx from the antiderivative.
    const double T = 10.0;
    const double osc_exact =
        (1.0 - std::exp(-T) * (std::cos(40.0 * T) - 40.0 * std::sin(40.0 * T))) / 1601.0;
    CHECK(integrate([](double x) { return std::cos(40.0 * x) * std::exp(-x); }, 0.0, T) ==
          doctest::Approx(osc_exact).epsilon(1e-10));
    CHECK(integrate_to_infinity([](double x) { return std::exp(-x); }, 0.0, 1.0) ==
          doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("principal value with a simple pole") {
    // PV int_0^2 1/(x - 1) dx = 0 exactly.
    const Integrand one = [](double) { return 1.0; };
    const Integrand om = [](double x) { return x; };
    const Integrand omp = [](double) { return 1.0; };
    CHECK(principal_value(one, om, omp, 1.0, 1.0, 0.0, 2.0) ==
          doctest::Approx(0.0).epsilon(1e-12));

    // PV int_0^3 x^2/(x-1) dx = int (x+1) dx + PV int 1/(x-1)
    //                         = 7.5 + ln 2.
    const Integrand x2 = [](double x) { return x * x; };
    CHECK(principal_value(x2, om, omp, 1.0, 1.0, 0.0, 3.0) ==
          doctest::Approx(7.5 + std::log(2.0)).epsilon(1e-11));

    // Nonlinear omega(k): PV int_0^2 k / (k^2 - 1) dk = 0.5 ln|...| form;
    // symmetric bounds around the pole give 0.5 ln(3).
    const Integrand k = [](double x) { return x; };
    const Integrand om2 = [](double x) { return x * x; };
    const Integrand om2p = [](double x) { return 2.0 * x; };
    CHECK(principal_value(k, om2, om2p, 1.0, 1.0, 0.0, 2.0) ==
          doctest::Approx(0.5 * std::log(3.0)).epsilon(1e-11));
}
