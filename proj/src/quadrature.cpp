#include "dsq/quadrature.hpp"

#include <cmath>
#include <string>

#include "dsq/cmatrix.hpp"

namespace dsq {

namespace {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
constexpr double kron_x[15] = {
    -0.991455371120812639206854697526329, -0.949107912342758524526189684047851,
    -0.864864423359769072789712788640926, -0.741531185599394439863864773280788,
    -0.586087235467691130294144838258730, -0.405845151377397166906606412076961,
    -0.207784955007898467600689403773245, 0.0,
    0.207784955007898467600689403773245,  0.405845151377397166906606412076961,
    0.586087235467691130294144838258730,  0.741531185599394439863864773280788,
    0.864864423359769072789712788640926,  0.949107912342758524526189684047851,
    0.991455371120812639206854697526329};

constexpr double kron_w[15] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
    0.204432940075298892414161999234649, 0.190350578064785409913256402421014,
    0.169004726639267902826583426598550, 0.140653259715525918745189590510238,
    0.104790010322250183839876322541518, 0.063092092629978553290700663189204,
    0.022935322010529224963732008058970};

constexpr double gauss_w[7] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
    0.381830050505118944950369775488975, 0.279705391489276667901467771423780,
    0.129484966168869693270611432679082};

struct PanelResult {
    double value;
    double error;
};

PanelResult gk15(const Integrand& f, double a, double b) {
    const double h = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double fk[15];
    for (int i = 0; i < 15; ++i) fk[i] = f(mid + h * kron_x[i]);
    double kres = 0.0;
    for (int i = 0; i < 15; ++i) kres += kron_w[i] * fk[i];
    double gres = 0.0;
    for (int i = 0; i < 7; ++i) gres += gauss_w[i] * fk[2 * i + 1];
    kres *= h;
    gres *= h;
    const double diff = std::abs(kres - gres);
    // Standard QUADPACK-style error sharpening.
    const double err = diff == 0.0 ? 0.0 : diff * std::min(1.0, std::pow(200.0 * diff, 1.5));
    return {kres, std::max(err, std::abs(kres) * 1e-16)};
}

double adapt(const Integrand& f, double a, double b, double tol, int depth, int max_depth) {
    const PanelResult whole = gk15(f, a, b);
    if (whole.error <= tol || depth >= max_depth) {
        if (depth >= max_depth && whole.error > 1e3 * std::max(tol, 1e-300))
            throw NumericalError("quadrature: max depth reached, residual " +
                                 std::to_string(whole.error));
        return whole.value;
    }
    const double mid = 0.5 * (a + b);
    return adapt(f, a, mid, 0.5 * tol, depth + 1, max_depth) +
           adapt(f, mid, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace

double integrate(const Integrand& f, double a, double b, const QuadOptions& opt) {
    if (a == b) return 0.0;
    const PanelResult first = gk15(f, a, b);
    const double tol = std::max(opt.abs_tol, opt.rel_tol * std::abs(first.value));
    if (first.error <= tol) return first.value;
    return adapt(f, a, b, tol, 0, opt.max_depth);
}

double integrate_to_infinity(const Integrand& f, double a, double first_width, double tail_rel,
                             const QuadOptions& opt) {
    double total = integrate(f, a, a + first_width, opt);
    double lo = a + first_width;
    double width = first_width;
    for (int block = 0; block < 60; ++block) {
        const double piece = integrate(f, lo, lo + width, opt);
        total += piece;
        lo += width;
        width *= 2.0;
        if (std::abs(piece) < tail_rel * std::max(std::abs(total), 1e-300)) return total;
    }
    throw NumericalError("integrate_to_infinity: tail did not decay");
}

double principal_value(const Integrand& f, const Integrand& omega, const Integrand& omega_prime,
                       double omega0, double pole, double a, double b, const QuadOptions& opt) {
    if (!(a < pole && pole < b)) throw NumericalError("principal_value: pole outside interval");
    const double residue = f(pole) / omega_prime(pole);
    const Integrand reg = [&](double k) {
        if (k == pole) return 0.0;  // removable after subtraction; GK nodes avoid it anyway
        return f(k) / (omega(k) - omega0) - residue / (k - pole);
    };
    // Split at the pole and symmetrically around it so the near-cancellation
    // region is resolved by its own panels.
    const double h = std::min(pole - a, b - pole);
    double total = integrate(reg, a, pole - h, opt) + integrate(reg, pole - h, pole, opt) +
                   integrate(reg, pole, pole + h, opt) + integrate(reg, pole + h, b, opt);
    total += residue * std::log((b - pole) / (pole - a));
    return total;
}

}  // namespace dsq
