// Documented example parameter sets. Both sit inside the qubit window
// 0.33 <= nu < 0.80 for a Rb-87 condensate; they differ in the impurity
// mass ratio and coupling, which moves the resonant phonon wavenumber.

#pragma once

#include "dsq/bec.hpp"

namespace dsq {

/// Resonant wavenumber tuned to k0 xi = 0.32 pi, so the collective damping
/// Gamma(d) = gamma cos(k0 d) is strongly negative (-0.809 gamma) at
/// d = 5 xi / 2 (antisymmetric state superradiant there). nu = 0.75.
BecParams collective_regime_params();

/// Chemical potential mu/hbar ~ 2 pi x 1 kHz and a weakly coupled, heavier
/// impurity (nu = 0.79), giving millisecond-scale correlation dynamics.
BecParams khz_regime_params();

}  // namespace dsq
