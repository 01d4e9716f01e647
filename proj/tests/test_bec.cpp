#include <cmath>

#include "doctest.h"
#include "dsq/bec.hpp"
#include "dsq/presets.hpp"
#include "dsq/quadrature.hpp"

using namespace dsq;

TEST_CASE("derive_params: chi = 0 collapses the gap") {
    BecParams p = collective_regime_params();
    p.chi = 0.0;
    const DerivedParams d = derive_params(p);
    CHECK(d.nu == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(d.omega0 < 0.0);
    CHECK_FALSE(d.qubit_regime);
}

TEST_CASE("derive_params: nu = 1/2 closes the gap") {
    // nu = 1/2 needs (m/M)(chi/g) = nu(nu+1) = 3/4.
    BecParams p = collective_regime_params();
    p.m = 0.5 * p.M;
    p.chi = 1.5 * p.g;
    const DerivedParams d = derive_params(p);
    CHECK(d.nu == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(d.omega0 == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("derive_params: fixture regime") {
    const DerivedParams d = derive_params(collective_regime_params());
    CHECK(d.nu == doctest::Approx(0.75).epsilon(1e-6));
    CHECK(d.qubit_regime);
    CHECK(d.omega0_dimless == doctest::Approx(1.74436).epsilon(1e-4));
    CHECK(d.width_exp == doctest::Approx(std::sqrt(2.625)).epsilon(1e-6));
    CHECK(d.n_bound == doctest::Approx(1.0 + 0.75 + std::sqrt(0.75 * 1.75)).epsilon(1e-6));
    CHECK(d.n_bound_floor == 2);
    CHECK(d.xi > 0.0);
    CHECK(d.mu == doctest::Approx(collective_regime_params().g * 5e8).epsilon(1e-12));
}

TEST_CASE("normalization constants against direct quadrature") {
    BecParams p = collective_regime_params();
    for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
        // width_exp = sqrt(2 chi m / (g M)): tune chi to hit alpha.
        p.chi = alpha * alpha * p.g * p.M / (2.0 * p.m);
        const DerivedParams d = derive_params(p);
        CHECK(d.width_exp == doctest::Approx(alpha).epsilon(1e-12));

        const double norm0 =
            2.0 * integrate([&](double x) { return phi0(x, d) * phi0(x, d); }, 0.0, 60.0);
        const double norm1 =
            2.0 * integrate([&](double x) { return phi1(x, d) * phi1(x, d); }, 0.0, 60.0);
        CHECK(norm0 == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(norm1 == doctest::Approx(1.0).epsilon(1e-8));
    }
}

TEST_CASE("normalization special case: alpha = 1 gives A0 = 1/sqrt(2)") {
    BecParams p = collective_regime_params();
    p.chi = p.g * p.M / (2.0 * p.m);
    const DerivedParams d = derive_params(p);
    CHECK(d.width_exp == doctest::Approx(1.0));
    CHECK(d.A0 == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
    CHECK(d.A1 == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-10));
}

TEST_CASE("wavefunction parity and decay") {
    const DerivedParams d = derive_params(collective_regime_params());
    CHECK(phi1(0.0, d) == 0.0);
    CHECK(phi0(0.0, d) == doctest::Approx(d.A0));
    for (double x : {0.3, 1.1, 2.7}) {
        CHECK(phi0(x, d) == doctest::Approx(phi0(-x, d)));
        CHECK(phi1(x, d) == doctest::Approx(-phi1(-x, d)));
    }
    CHECK(std::abs(phi0(30.0, d)) < 1e-12);
    CHECK(std::abs(phi1(30.0, d)) < 1e-12);
}

TEST_CASE("bogoliubov spectrum") {
    const DerivedParams d = derive_params(collective_regime_params());
    CHECK(bogoliubov_energy(0.0, d) == 0.0);
    CHECK(bogoliubov_energy(1.0, d) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    CHECK(bogoliubov_energy(-1.0, d) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    // Free-particle limit: eps / k^2 -> 1.
    CHECK(bogoliubov_energy(300.0, d) / (300.0 * 300.0) == doctest::Approx(1.0).epsilon(1e-4));
    // Monotone in |k|.
    double prev = 0.0;
    for (double k = 0.1; k < 5.0; k += 0.1) {
        const double e = bogoliubov_energy(k, d);
        CHECK(e > prev);
        prev = e;
    }
}

TEST_CASE("resonant_k inverts the spectrum") {
    const DerivedParams d = derive_params(collective_regime_params());
    CHECK(resonant_k(std::sqrt(3.0), d) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(resonant_k(1e-8, d) < 1e-3);
    for (double e : {0.037, 0.8, 2.31, 17.0}) {
        const double k = resonant_k(e, d);
        CHECK(bogoliubov_energy(k, d) == doctest::Approx(e).epsilon(1e-10));
    }
    CHECK_THROWS_AS(resonant_k(0.0, d), DomainError);
}

TEST_CASE("mode provider normalization u^2 - v^2 = 1") {
    const DerivedParams d = derive_params(collective_regime_params());
    const HomogeneousModes modes;
    for (double k : {0.05, 0.3, 1.0, 4.0, 20.0}) {
        const double u = modes.u_amplitude(k, d);
        const double v = modes.v_amplitude(k, d);
        CHECK(u * u - v * v == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(v < 0.0);
        CHECK(modes.contact_amplitude(k, d) > 0.0);
    }
    // Density vertex vanishes toward k = 0 (infrared safety).
    CHECK(modes.contact_amplitude(1e-4, d) < 0.01);
}

TEST_CASE("coupling_g symmetries") {
    const BecParams p = collective_regime_params();
    const DerivedParams d = derive_params(p);
    const RateModel model(p, d);

    // Conjugate symmetry under k -> -k at x_i = 0 (real even overlap).
    for (double k : {0.4, 1.1, 2.3}) {
        const Complex gp = model.coupling_g(k, 0.0);
        const Complex gm = model.coupling_g(-k, 0.0);
        CHECK(std::abs(gp - std::conj(gm)) < 1e-15);
        CHECK(std::abs(gp.imag()) < 1e-15);
    }

    // Translation by d multiplies by e^{ikd}.
    const double k = 1.3, sep = 2.5;
    const Complex g1 = model.coupling_g(k, 0.0);
    const Complex g2 = model.coupling_g(k, sep);
    CHECK(std::abs(g2 - g1 * std::polar(1.0, k * sep)) < 1e-15);

    // |g|^2 L independent of the quantization length.
    BecParams p2 = p;
    p2.quant_length = 7777.0;
    const RateModel model2(p2, d);
    const double s1 = std::norm(model.coupling_g(k, 0.0)) * p.quant_length;
    const double s2 = std::norm(model2.coupling_g(k, 0.0)) * p2.quant_length;
    CHECK(s1 == doctest::Approx(s2).epsilon(1e-12));
}

TEST_CASE("rates: structure of gamma, Gamma(d), eta(d)") {
    const BecParams p = collective_regime_params();
    const DerivedParams d = derive_params(p);
    const RateModel model(p, d);
    const double gamma = model.gamma();
    CHECK(gamma > 0.0);

    // Gamma(0) = gamma.
    const RateSet r0 = model.rates(0.0);
    CHECK(r0.big_gamma == doctest::Approx(gamma).epsilon(1e-9));

    // |Gamma| <= gamma, evenness, a sign change on (0, 10].
    bool sign_change = false;
    double prev = r0.big_gamma;
    for (double sep = 0.25; sep <= 10.0; sep += 0.25) {
        const RateSet r = model.rates(sep);
        CHECK(std::abs(r.big_gamma) <= gamma * (1.0 + 1e-9));
        const RateSet rm = model.rates(-sep);
        CHECK(r.big_gamma == doctest::Approx(rm.big_gamma).epsilon(1e-12));
        CHECK(std::abs(r.eta - rm.eta) < 1e-6 * gamma);
        if (prev * r.big_gamma < 0.0) sign_change = true;
        prev = r.big_gamma;
    }
    CHECK(sign_change);

    // Antisymmetric state superradiant at d ~ 5 xi/2.
    CHECK(model.rates(2.5).big_gamma < 0.0);
}

TEST_CASE("rates: no resonance without a positive gap") {
    BecParams p = collective_regime_params();
    p.chi = 0.0;
    const DerivedParams d = derive_params(p);
    CHECK_THROWS_AS(RateModel(p, d), DomainError);
}

TEST_CASE("eta(d) approaches the far-field law -(gamma/2) sin(k0 d)") {
    const BecParams p = collective_regime_params();
    const DerivedParams d = derive_params(p);
    const RateModel model(p, d);
    const double gamma = model.gamma();
    const double k0 = model.resonant_wavenumber();
    double prev = 1.0;
    for (double sep : {20.0, 30.0, 50.0}) {
        const double diff =
            std::abs(model.rates(sep).eta + 0.5 * gamma * std::sin(k0 * sep)) / gamma;
        CHECK(diff < 5e-3);
        CHECK(diff < prev);  // near-field corrections decay with distance
        prev = diff;
    }
}

TEST_CASE("delta-constrained rate matches broadened-quadrature extrapolation") {
    const BecParams p = collective_regime_params();
    const DerivedParams d = derive_params(p);
    const RateModel model(p, d);
    const double gamma = model.gamma();
    for (double sep : {0.0, 1.2, 2.5}) {
        const double direct = model.rates(sep).big_gamma;
        const double broadened = model.lorentzian_big_gamma(sep, 0.02);
        CHECK(std::abs(direct - broadened) < 1e-3 * gamma);
    }
}
