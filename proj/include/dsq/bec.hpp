// Condensate-side physics: derived qubit parameters, impurity bound-state
// wavefunctions, Bogoliubov spectrum (convention eps_k =
// mu xi sqrt(k^2 (xi^2 k^2 + 2)) with xi = hbar / sqrt(M n0 g)) and the
// phonon-mediated decay / coupling rates between two soliton qubits.
//
// Unit system: BecParams is SI; everything downstream works in soliton
// units (lengths in xi, energies in mu, rates in mu/hbar). DerivedParams
// keeps the SI scale factors so the CLI can convert back.

#pragma once

#include <complex>
#include <memory>

#include "dsq/cmatrix.hpp"

namespace dsq {

inline constexpr double kHbar = 1.054571817e-34;  // J s

struct BecParams {
    double g;             // particle-particle coupling, J m
    double chi;           // condensate-impurity coupling, J m
    double M;             // condensate particle mass, kg
    double m;             // impurity mass, kg
    double n0;            // linear density, 1/m
    double quant_length;  // mode quantization length, in units of xi

    void validate() const;
};

struct DerivedParams {
    double xi;              // healing length, m
    double mu;              // chemical potential g n0, J
    double nu;              // bound-state control parameter
    double omega0;          // qubit gap, rad/s
    double omega0_dimless;  // hbar omega0 / mu
    double width_exp;       // wavefunction width exponent alpha
    double A0, A1;          // normalization constants, xi = 1 units
    double n_bound;         // 1 + nu + sqrt(nu (nu+1)), as printed
    int n_bound_floor;
    bool qubit_regime;      // 0.33 <= nu < 0.80
};

/// Decay/coupling triple: single-qubit decay gamma, collective damping
/// Gamma(d), coherent qubit-qubit coupling eta(d). Units follow the caller
/// (mu/hbar from the rate model, or gamma = 1 after normalized()).
struct RateSet {
    double gamma;
    double big_gamma;
    double eta;

    RateSet normalized() const { return {1.0, big_gamma / gamma, eta / gamma}; }
};

DerivedParams derive_params(const BecParams& p);

/// Bound-state wavefunctions, x in units of xi, normalized on the line.
double phi0(double x, const DerivedParams& dp);
double phi1(double x, const DerivedParams& dp);

/// Phonon dispersion, k in 1/xi, result in units of mu.
double bogoliubov_energy(double k, const DerivedParams& dp);

/// Inverse of the dispersion on k > 0: xi^2 k^2 = -1 + sqrt(1 + (E/mu)^2).
double resonant_k(double energy, const DerivedParams& dp);

/// Bogoliubov mode amplitudes for a plane-wave envelope e^{ikx}/sqrt(L).
/// Pluggable so soliton-frame modes can replace the homogeneous default.
class ModeProvider {
  public:
    virtual ~ModeProvider() = default;
    virtual double u_amplitude(double k, const DerivedParams& dp) const = 0;  // cosh(theta_k)
    virtual double v_amplitude(double k, const DerivedParams& dp) const = 0;  // -sinh(theta_k)

    /// Density-coupling vertex u + v = e^{-theta_k}; vanishes at k -> 0,
    /// which keeps the principal-value coupling integral infrared finite.
    double contact_amplitude(double k, const DerivedParams& dp) const {
        return u_amplitude(k, dp) + v_amplitude(k, dp);
    }
};

/// Homogeneous-condensate amplitudes fixed by u^2 - v^2 = 1 and the
/// dispersion: cosh^2 = (W + eps)/(2 eps), W = mu (xi^2 k^2 + 1).
class HomogeneousModes final : public ModeProvider {
  public:
    double u_amplitude(double k, const DerivedParams& dp) const override;
    double v_amplitude(double k, const DerivedParams& dp) const override;
};

/// Rate pipeline for one parameter set. Tabulates the overlap integral
/// I(k) = integral phi0 phi1 tanh(x) e^{ikx} dx once, then evaluates the
/// delta-constrained collective damping and the principal-value coupling.
class RateModel {
  public:
    RateModel(const BecParams& p, const DerivedParams& dp,
              const ModeProvider& modes = default_modes());

    /// Overlap integral I(k), real and even in k.
    double coupling_overlap(double k) const;

    /// g(k) for the soliton at position x_i (units of xi); scales as
    /// 1/sqrt(quant_length). Result in units of mu.
    Complex coupling_g(double k, double x_i) const;

    /// S(k) = quant_length |g(k)|^2 / mu^2 (quantization-length free).
    double spectral_density(double k) const;

    double resonant_wavenumber() const { return k0_; }

    /// Single-qubit decay, units mu/hbar.
    double gamma() const { return gamma_; }

    /// (gamma, Gamma(d), eta(d)) for separation d in units of xi.
    RateSet rates(double d) const;

    /// Same Gamma(d) integral with the energy delta replaced by a
    /// width-eps Lorentzian and the full k quadrature carried out;
    /// linear eps -> 0 extrapolation. Oracle for the resonant evaluation.
    double lorentzian_big_gamma(double d, double eps) const;

    static const ModeProvider& default_modes();

  private:
    BecParams p_;
    DerivedParams dp_;
    const ModeProvider* modes_;
    double k0_;
    double gamma_;
    double tab_step_;
    std::vector<double> overlap_tab_;

    double eta(double d) const;
};

/// One-shot convenience wrapper around RateModel.
RateSet rates(double d, const DerivedParams& dp, const BecParams& p);

}  // namespace dsq
