// Gamma and Gauss hypergeometric functions, restricted to the parameter
// ranges the impurity wavefunction normalization actually needs.

#pragma once

namespace dsq {

/// Gamma function for x > 0. Throws DomainError otherwise.
double gamma_fn(double x);

/// 2F1(a, b; c; z) for z in [-1, 0]. c must not be a non-positive integer.
/// Near z = -1 the defining series is slow, so the evaluation switches to
/// the Pfaff-transformed series in z/(z-1) <= 1/2.
double hyp2f1(double a, double b, double c, double z);

}  // namespace dsq
