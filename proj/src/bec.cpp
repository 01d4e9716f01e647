#include "dsq/bec.hpp"

#include <cmath>
#include <string>

#include "dsq/quadrature.hpp"
#include "dsq/special.hpp"

namespace dsq {

void BecParams::validate() const {
    if (!(g > 0.0)) throw DomainError("BecParams: repulsive interactions required (g > 0)");
    if (!(chi >= 0.0)) throw DomainError("BecParams: chi must be >= 0");
    if (!(M > 0.0) || !(m > 0.0)) throw DomainError("BecParams: masses must be positive");
    if (!(n0 > 0.0)) throw DomainError("BecParams: density must be positive");
    if (!(quant_length > 0.0)) throw DomainError("BecParams: quantization length must be positive");
}

DerivedParams derive_params(const BecParams& p) {
    p.validate();
    DerivedParams d{};
    d.mu = p.g * p.n0;
    d.xi = kHbar / std::sqrt(p.M * p.n0 * p.g);
    d.nu = 0.5 * (-1.0 + std::sqrt((p.g * p.M + 4.0 * p.m * p.chi) / (p.g * p.M)));
    d.omega0 = kHbar * (2.0 * d.nu - 1.0) / (2.0 * p.m * d.xi * d.xi);
    d.omega0_dimless = kHbar * d.omega0 / d.mu;
    d.width_exp = std::sqrt(2.0 * p.chi * p.m / (p.g * p.M));
    d.n_bound = 1.0 + d.nu + std::sqrt(d.nu * (d.nu + 1.0));
    d.n_bound_floor = static_cast<int>(std::floor(d.n_bound));
    d.qubit_regime = (d.nu >= 0.33 && d.nu < 0.80);

    const double a = d.width_exp;
    if (a < 1e-10) {
        // chi = 0: the bound state delocalizes, normalization degenerates.
        d.A0 = 0.0;
        d.A1 = 0.0;
        return d;
    }
    d.A0 = 1.0 / std::sqrt(std::sqrt(M_PI) * gamma_fn(a) / gamma_fn(a + 0.5));
    const double f1 = hyp2f1(a, 2.0 * (1.0 + a), 1.0 + a, -1.0);
    const double f2 = hyp2f1(1.0 + a, 2.0 * (1.0 + a), 2.0 + a, -1.0);
    const double f3 = hyp2f1(2.0 + a, 2.0 * (1.0 + a), 3.0 + a, -1.0);
    const double bracket = f1 / a - 2.0 * f2 / (1.0 + a) + f3 / (2.0 + a);
    d.A1 = 1.0 / std::sqrt(std::pow(2.0, 2.0 * (1.0 + a)) * d.A0 * d.A0 * bracket);
    return d;
}

double phi0(double x, const DerivedParams& dp) {
    return dp.A0 * std::pow(1.0 / std::cosh(x), dp.width_exp);
}

double phi1(double x, const DerivedParams& dp) {
    return 2.0 * dp.A1 * std::tanh(x) * phi0(x, dp);
}

double bogoliubov_energy(double k, const DerivedParams&) {
    return std::sqrt(k * k * (k * k + 2.0));
}

double resonant_k(double energy, const DerivedParams&) {
    if (!(energy > 0.0)) throw DomainError("resonant_k: requires E > 0");
    return std::sqrt(-1.0 + std::sqrt(1.0 + energy * energy));
}

namespace {

double dispersion(double k) { return std::abs(k) * std::sqrt(k * k + 2.0); }

double dispersion_slope(double k) { return 2.0 * (k * k + 1.0) / std::sqrt(k * k + 2.0); }

}  // namespace

double HomogeneousModes::u_amplitude(double k, const DerivedParams&) const {
    const double eps = dispersion(k);
    if (eps == 0.0) throw DomainError("HomogeneousModes: k = 0 has no Bogoliubov mode");
    const double w = k * k + 1.0;
    return std::sqrt((w + eps) / (2.0 * eps));
}

double HomogeneousModes::v_amplitude(double k, const DerivedParams&) const {
    const double eps = dispersion(k);
    if (eps == 0.0) throw DomainError("HomogeneousModes: k = 0 has no Bogoliubov mode");
    const double w = k * k + 1.0;
    return -std::sqrt((w - eps) / (2.0 * eps));
}

const ModeProvider& RateModel::default_modes() {
    static const HomogeneousModes modes;
    return modes;
}

RateModel::RateModel(const BecParams& p, const DerivedParams& dp, const ModeProvider& modes)
    : p_(p), dp_(dp), modes_(&modes) {
    if (!(dp_.omega0_dimless > 0.0))
        throw DomainError("RateModel: omega0 <= 0, no resonant phonon exists");
    k0_ = resonant_k(dp_.omega0_dimless, dp_);

    // Tabulate I(k) on a uniform grid; the overlap decays exponentially in
    // k, so the table covers everything the quadratures can see.
    tab_step_ = 1.0 / 64.0;
    const double k_top = 60.0;
    const int n = static_cast<int>(k_top / tab_step_) + 4;
    overlap_tab_.resize(static_cast<size_t>(n));
    const double a2 = 2.0 * dp_.width_exp;
    const double u_end = std::max(6.0, 42.0 / a2);  // sech^{2a} < 1e-18 beyond
    const double norm = 4.0 * dp_.A0 * dp_.A0 * dp_.A1;
    for (int i = 0; i < n; ++i) {
        const double k = tab_step_ * i;
        overlap_tab_[static_cast<size_t>(i)] =
            norm * integrate(
                       [&](double u) {
                           const double th = std::tanh(u);
                           return th * th * std::pow(1.0 / std::cosh(u), a2) * std::cos(k * u);
                       },
                       0.0, u_end);
    }

    gamma_ = 2.0 * spectral_density(k0_) / dispersion_slope(k0_);
}

double RateModel::coupling_overlap(double k) const {
    const double ka = std::abs(k);
    const double pos = ka / tab_step_;
    const int n = static_cast<int>(overlap_tab_.size());
    if (pos >= n - 3) return 0.0;
    // 4-point Lagrange interpolation on the uniform table.
    int i0 = static_cast<int>(pos) - 1;
    if (i0 < 0) i0 = 0;
    if (i0 > n - 4) i0 = n - 4;
    const double t = pos - i0;
    const double c0 = -(t - 1.0) * (t - 2.0) * (t - 3.0) / 6.0;
    const double c1 = t * (t - 2.0) * (t - 3.0) / 2.0;
    const double c2 = -t * (t - 1.0) * (t - 3.0) / 2.0;
    const double c3 = t * (t - 1.0) * (t - 2.0) / 6.0;
    return c0 * overlap_tab_[static_cast<size_t>(i0)] + c1 * overlap_tab_[static_cast<size_t>(i0 + 1)] +
           c2 * overlap_tab_[static_cast<size_t>(i0 + 2)] + c3 * overlap_tab_[static_cast<size_t>(i0 + 3)];
}

Complex RateModel::coupling_g(double k, double x_i) const {
    const double chi_over_g = p_.chi / p_.g;
    const double n0xi = p_.n0 * dp_.xi;
    const double amp = modes_->contact_amplitude(k, dp_);
    const double mag = chi_over_g / std::sqrt(n0xi) * amp * coupling_overlap(k) /
                       std::sqrt(p_.quant_length);
    return std::polar(mag, k * x_i);
}

double RateModel::spectral_density(double k) const {
    const double chi_over_g = p_.chi / p_.g;
    const double amp = modes_->contact_amplitude(k, dp_);
    const double ov = coupling_overlap(k);
    return chi_over_g * chi_over_g / (p_.n0 * dp_.xi) * amp * amp * ov * ov;
}

RateSet RateModel::rates(double d) const {
    // Delta-constrained integral: the +k and -k branches at the resonant
    // wavenumber combine the e^{+-ikd} phases into cos(k0 d).
    const double big_gamma = gamma_ * std::cos(k0_ * d);
    return {gamma_, big_gamma, eta(d)};
}

double RateModel::eta(double d) const {
    const double w0 = dp_.omega0_dimless;
    const Integrand num = [&](double k) { return spectral_density(k) * std::cos(k * d); };
    const Integrand omega = [](double k) { return dispersion(k); };
    const Integrand slope = [](double k) { return dispersion_slope(k); };
    const double k_max = 50.0;
    double total = principal_value(num, omega, slope, w0, k0_, 0.0, k_max);
    // Extend the cutoff until the tail is negligible; the overlap decay
    // makes these blocks essentially zero.
    double lo = k_max, width = k_max;
    for (int i = 0; i < 8; ++i) {
        const double piece = integrate([&](double k) { return num(k) / (dispersion(k) - w0); }, lo, lo + width);
        total += piece;
        if (std::abs(piece) < 1e-8 * std::max(std::abs(total), 1e-300)) break;
        lo += width;
        width *= 2.0;
    }
    return total / M_PI;
}

double RateModel::lorentzian_big_gamma(double d, double eps) const {
    const auto broadened = [&](double e) {
        const Integrand f = [&](double k) {
            const double x = dispersion(k) - dp_.omega0_dimless;
            return spectral_density(k) * std::cos(k * d) * (e / M_PI) / (x * x + e * e);
        };
        // The Lorentzian peak needs its own panels; split at the resonance.
        return 2.0 * (integrate(f, 0.0, k0_) + integrate(f, k0_, 50.0));
    };
    const double g1 = broadened(eps);
    const double g2 = broadened(0.5 * eps);
    return 2.0 * g2 - g1;  // linear eps -> 0 extrapolation
}

RateSet rates(double d, const DerivedParams& dp, const BecParams& p) {
    return RateModel(p, dp).rates(d);
}

}  // namespace dsq
