#include "dsq/special.hpp"

#include <cmath>
#include <string>

#include "dsq/cmatrix.hpp"

namespace dsq {

double gamma_fn(double x) {
    if (!(x > 0.0)) throw DomainError("gamma_fn: requires x > 0, got " + std::to_string(x));
    return std::tgamma(x);
}

namespace {

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && std::abs(x - std::round(x)) < 1e-12;
}

// Plain series sum_n (a)_n (b)_n / (c)_n z^n / n!, valid for |z| < 1.
double gauss_series(double a, double b, double c, double z) {
    double term = 1.0;
    double sum = 1.0;
    int small_terms = 0;
    for (int n = 0; n < 800; ++n) {
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * z;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum)) {
            if (++small_terms >= 2) return sum;
        } else {
            small_terms = 0;
        }
        if (term == 0.0) return sum;  // terminating (polynomial) case
    }
    throw NumericalError("hyp2f1: series did not converge for a=" + std::to_string(a) +
                         " b=" + std::to_string(b) + " c=" + std::to_string(c) +
                         " z=" + std::to_string(z));
}

}  // namespace

double hyp2f1(double a, double b, double c, double z) {
    if (is_nonpositive_integer(c))
        throw DomainError("hyp2f1: c is a non-positive integer (c=" + std::to_string(c) + ")");
    if (z > 0.0 || z < -1.0)
        throw DomainError("hyp2f1: z must lie in [-1, 0], got " + std::to_string(z));
    if (z == 0.0) return 1.0;
    // Terminating series stays exact in the original variable.
    if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) return gauss_series(a, b, c, z);
    if (z > -0.25) return gauss_series(a, b, c, z);
    // Pfaff: 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a, c-b; c; z/(z-1)).
    const double w = z / (z - 1.0);
    return std::pow(1.0 - z, -a) * gauss_series(a, c - b, c, w);
}

}  // namespace dsq
