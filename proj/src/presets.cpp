#include "dsq/presets.hpp"

#include <cmath>

namespace dsq {

namespace {

constexpr double kRb87Mass = 1.44316060e-25;  // kg

// Fix (m, chi) from a target bound-state parameter nu and resonant phonon
// wavenumber k0 xi:   omega0 hbar/mu = (M/m)(2 nu - 1)/2  and
// (m/M)(chi/g) = nu (nu + 1).
BecParams from_targets(double g, double n0, double nu, double k0) {
    const double w0 = k0 * std::sqrt(k0 * k0 + 2.0);
    const double mass_ratio = (2.0 * nu - 1.0) / (2.0 * w0);
    BecParams p{};
    p.g = g;
    p.M = kRb87Mass;
    p.m = mass_ratio * kRb87Mass;
    p.chi = nu * (nu + 1.0) / mass_ratio * g;
    p.n0 = n0;
    p.quant_length = 1000.0;
    return p;
}

}  // namespace

BecParams collective_regime_params() {
    // k0 xi = 0.32 pi makes Gamma(5 xi/2) = gamma cos(0.8 pi) = -0.809 gamma:
    // the antisymmetric state is strongly superradiant at that separation
    // while |Gamma| < gamma still holds. mu/hbar = 4741 1/s.
    return from_targets(1.0e-39, 5.0e8, 0.75, 0.32 * M_PI);
}

BecParams khz_regime_params() {
    // Weaker-coupled, heavier impurity: nu = 0.79, k0 xi = 0.16, with
    // mu/hbar = 6283 1/s (2 pi x 1 kHz). gamma = 0.79 1/s, so correlation
    // dynamics plays out over tens of milliseconds.
    return from_targets(6.6262e-40, 1.0e9, 0.79, 0.16);
}

}  // namespace dsq
