#include "dsq/dynamics.hpp"

#include <cmath>
#include <string>

namespace dsq {

namespace {

// Columns of the Dicke basis in product coordinates.
const CMatrix& dicke_basis() {
    static const CMatrix v = [] {
        CMatrix m(4);
        const double s = 1.0 / std::sqrt(2.0);
        m(0, 0) = 1.0;                  // |e> = |e1 e2>
        m(1, 1) = s;  m(2, 1) = s;      // |s>
        m(1, 2) = s;  m(2, 2) = -s;     // |a>
        m(3, 3) = 1.0;                  // |g> = |g1 g2>
        return m;
    }();
    return v;
}

}  // namespace

DickeState to_dicke(const ProductState& ps) {
    const CMatrix& v = dicke_basis();
    return DickeState(DensityMatrix(v.adjoint() * ps.rho().mat() * v, ps.rho().tolerance()));
}

ProductState to_product(const DickeState& ds) {
    const CMatrix& v = dicke_basis();
    return ProductState(DensityMatrix(v * ds.rho().mat() * v.adjoint(), ds.rho().tolerance()));
}

DickeState evolve_closed_form(const DickeState& rho0, const RateSet& r, double t) {
    const double g = r.gamma;
    const double G = r.big_gamma;
    if (!(std::abs(G) < g))
        throw DomainError("evolve_closed_form: requires |Gamma| < gamma (got Gamma/gamma = " +
                          std::to_string(G / g) + ")");
    if (t < 0.0) throw DomainError("evolve_closed_form: t must be >= 0");

    const CMatrix& m0 = rho0.rho().mat();
    const double coh_tol = 10.0 * rho0.rho().tolerance();
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 3}, {2, 3}})
        if (std::abs(m0(i, j)) > coh_tol)
            throw UnsupportedStateError(
                "evolve_closed_form: initial coherence outside the validated set "
                "(rho_es, rho_ea, rho_sg, rho_ag must vanish); use integrate_master");

    const double ee0 = m0(0, 0).real();
    const double ss0 = m0(1, 1).real();
    const double aa0 = m0(2, 2).real();
    const Complex eg0 = m0(0, 3);
    const Complex sa0 = m0(1, 2);

    const double e_g = std::exp(-g * t);
    const double e_2g = std::exp(-2.0 * g * t);
    const double e_p = std::exp(-(g + G) * t);
    const double e_m = std::exp(-(g - G) * t);

    CMatrix m(4);
    m(0, 0) = ee0 * e_2g;
    m(1, 1) = ss0 * e_p + (g + G) / (g - G) * (e_p - e_2g) * ee0;
    m(2, 2) = aa0 * e_m + (g - G) / (g + G) * (e_m - e_2g) * ee0;
    m(3, 3) = 1.0 - m(0, 0) - m(1, 1) - m(2, 2);
    m(0, 3) = eg0 * e_g;
    m(3, 0) = std::conj(m(0, 3));
    m(1, 2) = sa0 * e_g * std::polar(1.0, 2.0 * r.eta * t);
    m(2, 1) = std::conj(m(1, 2));
    return DickeState(DensityMatrix(m, rho0.rho().tolerance()));
}

namespace {

// sigma_-^1, sigma_-^2 in the product basis (|0> = |e>).
CMatrix lower_op(int qubit) {
    CMatrix s(2);
    s(1, 0) = 1.0;  // |g><e|
    CMatrix id = CMatrix::identity(2);
    return qubit == 1 ? kron(s, id) : kron(id, s);
}

CMatrix generator(const CMatrix& rho, const RateSet& r) {
    static const CMatrix sm1 = lower_op(1);
    static const CMatrix sm2 = lower_op(2);
    static const CMatrix sp1 = sm1.adjoint();
    static const CMatrix sp2 = sm2.adjoint();
    static const CMatrix hop = sp1 * sm2 + sp2 * sm1;

    const Complex i_eta(0.0, r.eta);
    CMatrix out = i_eta * (hop * rho - rho * hop);

    const double gam[2][2] = {{r.gamma, r.big_gamma}, {r.big_gamma, r.gamma}};
    const CMatrix* sm[2] = {&sm1, &sm2};
    const CMatrix* sp[2] = {&sp1, &sp2};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const CMatrix pm = *sp[i] * *sm[j];
            out += Complex(gam[i][j]) *
                   (*sm[j] * rho * *sp[i] - Complex(0.5) * (pm * rho + rho * pm));
        }
    return out;
}

}  // namespace

CMatrix liouvillian_apply(const ProductState& ps, const RateSet& r) {
    return generator(ps.rho().mat(), r);
}

namespace {

CMatrix rk4_step(const CMatrix& rho, const RateSet& r, double dt) {
    const CMatrix k1 = generator(rho, r);
    const CMatrix k2 = generator(rho + Complex(0.5 * dt) * k1, r);
    const CMatrix k3 = generator(rho + Complex(0.5 * dt) * k2, r);
    const CMatrix k4 = generator(rho + Complex(dt) * k3, r);
    CMatrix next = rho + Complex(dt / 6.0) * (k1 + Complex(2.0) * (k2 + k3) + k4);
    // Re-symmetrize so roundoff cannot accumulate an anti-Hermitian part.
    CMatrix sym(4);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) sym(a, b) = 0.5 * (next(a, b) + std::conj(next(b, a)));
    return sym;
}

void check_invariants(const CMatrix& rho) {
    if (std::abs(rho.trace() - Complex(1.0)) > 1e-6 || !rho.all_finite())
        throw NumericalError("integrate_master: invariant drift beyond 1e-6, reduce dt");
}

}  // namespace

ProductState integrate_master(const ProductState& rho0, const RateSet& r, double t_end, double dt) {
    if (t_end < 0.0) throw DomainError("integrate_master: t_end must be >= 0");
    if (!(dt > 0.0)) throw DomainError("integrate_master: dt must be > 0");
    CMatrix rho = rho0.rho().mat();
    const long steps = static_cast<long>(std::floor(t_end / dt + 1e-12));
    for (long s = 0; s < steps; ++s) {
        rho = rk4_step(rho, r, dt);
        if ((s & 0xff) == 0xff) check_invariants(rho);
    }
    const double rem = t_end - static_cast<double>(steps) * dt;
    if (rem > 1e-14) rho = rk4_step(rho, r, rem);
    check_invariants(rho);
    return ProductState(DensityMatrix(rho, 1e-8));
}

std::vector<ProductState> integrate_master_dense(const ProductState& rho0, const RateSet& r,
                                                 const std::vector<double>& sample_times, double dt) {
    std::vector<ProductState> out;
    out.reserve(sample_times.size());
    CMatrix rho = rho0.rho().mat();
    double t = 0.0;
    for (double ts : sample_times) {
        if (ts < t - 1e-12) throw DomainError("integrate_master_dense: sample times must ascend");
        while (ts - t > dt * (1.0 + 1e-12)) {
            rho = rk4_step(rho, r, dt);
            t += dt;
        }
        const double rem = ts - t;
        if (rem > 1e-14) {
            rho = rk4_step(rho, r, rem);
            t = ts;
        }
        check_invariants(rho);
        out.emplace_back(DensityMatrix(rho, 1e-8));
    }
    return out;
}

}  // namespace dsq
