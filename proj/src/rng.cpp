#include "dsq/rng.hpp"

#include <cmath>

namespace dsq {

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    spare_ = r * std::sin(2.0 * M_PI * u2);
    have_spare_ = true;
    return r * std::cos(2.0 * M_PI * u2);
}

CMatrix random_hermitian(Rng& rng, int dim) {
    CMatrix m(dim);
    for (int r = 0; r < dim; ++r) {
        m(r, r) = rng.normal();
        for (int c = r + 1; c < dim; ++c) {
            m(r, c) = 0.5 * rng.complex_normal();
            m(c, r) = std::conj(m(r, c));
        }
    }
    return m;
}

namespace {

std::vector<Complex> random_unit_vector(Rng& rng, int dim) {
    std::vector<Complex> v(static_cast<size_t>(dim));
    double n2 = 0.0;
    for (auto& x : v) {
        x = rng.complex_normal();
        n2 += std::norm(x);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& x : v) x *= inv;
    return v;
}

}  // namespace

CMatrix random_pure_state(Rng& rng, int dim) {
    const auto v = random_unit_vector(rng, dim);
    CMatrix m(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) = v[static_cast<size_t>(r)] * std::conj(v[static_cast<size_t>(c)]);
    return m;
}

DensityMatrix random_density_matrix(Rng& rng, int dim) {
    // A A^dagger with Gaussian A, normalized.
    CMatrix a(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) a(r, c) = rng.complex_normal();
    CMatrix m = a * a.adjoint();
    const double tr = m.trace().real();
    m *= Complex(1.0 / tr);
    // Symmetrize away roundoff.
    CMatrix sym(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) sym(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    return DensityMatrix(sym);
}

ProductState random_rank2_state(Rng& rng) {
    auto v1 = random_unit_vector(rng, 4);
    auto v2 = random_unit_vector(rng, 4);
    // Gram-Schmidt.
    Complex ov = 0.0;
    for (int i = 0; i < 4; ++i) ov += std::conj(v1[static_cast<size_t>(i)]) * v2[static_cast<size_t>(i)];
    double n2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        v2[static_cast<size_t>(i)] -= ov * v1[static_cast<size_t>(i)];
        n2 += std::norm(v2[static_cast<size_t>(i)]);
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& x : v2) x *= inv;

    const double p = rng.uniform();
    CMatrix m(4);
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m(r, c) = p * v1[static_cast<size_t>(r)] * std::conj(v1[static_cast<size_t>(c)]) +
                      (1.0 - p) * v2[static_cast<size_t>(r)] * std::conj(v2[static_cast<size_t>(c)]);
    return ProductState(DensityMatrix(m));
}

CMatrix random_unitary(Rng& rng, int dim) {
    return hermitian_eig(random_hermitian(rng, dim)).vectors;
}

}  // namespace dsq
