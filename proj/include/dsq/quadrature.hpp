// Adaptive Gauss-Kronrod (7-15) quadrature with helpers for semi-infinite
// tails and principal-value integrals with one simple pole. Subdivision is
// depth-first with a fixed order, so results are bit-reproducible.

#pragma once

#include <functional>

namespace dsq {

using Integrand = std::function<double(double)>;

struct QuadOptions {
    double rel_tol = 1e-11;
    double abs_tol = 1e-14;
    int max_depth = 40;
};

/// Integral of f over [a, b].
double integrate(const Integrand& f, double a, double b, const QuadOptions& opt = {});

/// Integral of f over [a, inf): blocks of doubling width are added until the
/// last block contributes less than `tail_rel` of the running total.
double integrate_to_infinity(const Integrand& f, double a, double first_width,
                             double tail_rel = 1e-8, const QuadOptions& opt = {});

/// Principal value of  integral_a^b  f(k) / (omega(k) - omega0)  dk  where
/// omega(pole) = omega0 is the only root in (a, b) and omega is smooth and
/// strictly monotone there. The simple pole is subtracted analytically:
/// the residue c = f(pole)/omega'(pole) times 1/(k - pole) is removed from
/// the integrand and its principal value log((b-pole)/(pole-a)) added back.
double principal_value(const Integrand& f, const Integrand& omega, const Integrand& omega_prime,
                       double omega0, double pole, double a, double b,
                       const QuadOptions& opt = {});

}  // namespace dsq
