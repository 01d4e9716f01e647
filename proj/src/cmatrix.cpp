#include "dsq/cmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace dsq {

double CMatrix::hermiticity_defect() const {
    double d = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            d = std::max(d, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
    return d;
}

double CMatrix::max_abs_diff(const CMatrix& b) const {
    double d = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) d = std::max(d, std::abs((*this)(r, c) - b(r, c)));
    return d;
}

double CMatrix::max_abs() const {
    double d = 0.0;
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) d = std::max(d, std::abs((*this)(r, c)));
    return d;
}

bool CMatrix::all_finite() const {
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            if (!std::isfinite((*this)(r, c).real()) || !std::isfinite((*this)(r, c).imag()))
                return false;
    return true;
}

CMatrix& CMatrix::operator+=(const CMatrix& b) {
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) (*this)(r, c) += b(r, c);
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& b) {
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) (*this)(r, c) -= b(r, c);
    return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c) (*this)(r, c) *= s;
    return *this;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    CMatrix m(a.dim());
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c) {
            Complex s = 0.0;
            for (int k = 0; k < a.dim(); ++k) s += a(r, k) * b(k, c);
            m(r, c) = s;
        }
    return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
    if (a.dim() != 2 || b.dim() != 2) throw Error("kron: expects two qubit matrices");
    CMatrix m(4);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) m(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
    return m;
}

namespace {

// One complex Jacobi rotation zeroing the (p,q) element of h, accumulating
// the transform into v.  h must be Hermitian.
void jacobi_rotate(CMatrix& h, CMatrix& v, int p, int q) {
    const Complex hpq = h(p, q);
    const double apq = std::abs(hpq);
    if (apq == 0.0) return;

    const double app = h(p, p).real();
    const double aqq = h(q, q).real();
    const Complex phase = hpq / apq;  // e^{i arg(h_pq)}

    // tan(2 theta) = 2|h_pq| / (h_pp - h_qq)
    const double tau = (app - aqq) / (2.0 * apq);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const int n = h.dim();
    // Columns: G = [[c, -s*phase],[s*conj(phase), c]] acting on (p,q).
    for (int k = 0; k < n; ++k) {
        const Complex hkp = h(k, p);
        const Complex hkq = h(k, q);
        h(k, p) = c * hkp + s * std::conj(phase) * hkq;
        h(k, q) = -s * phase * hkp + c * hkq;
    }
    for (int k = 0; k < n; ++k) {
        const Complex hpk = h(p, k);
        const Complex hqk = h(q, k);
        h(p, k) = c * hpk + s * phase * hqk;
        h(q, k) = -s * std::conj(phase) * hpk + c * hqk;
    }
    for (int k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp + s * std::conj(phase) * vkq;
        v(k, q) = -s * phase * vkp + c * vkq;
    }
    h(p, q) = 0.0;
    h(q, p) = 0.0;
}

double offdiag_norm(const CMatrix& h) {
    double s = 0.0;
    for (int r = 0; r < h.dim(); ++r)
        for (int c = 0; c < h.dim(); ++c)
            if (r != c) s = std::max(s, std::abs(h(r, c)));
    return s;
}

}  // namespace

EigenSystem hermitian_eig(const CMatrix& m, double herm_tol) {
    const double defect = m.hermiticity_defect();
    if (defect > herm_tol)
        throw Error("hermitian_eig: input not Hermitian, max asymmetry " + std::to_string(defect));
    if (!m.all_finite()) throw Error("hermitian_eig: non-finite entries");

    const int n = m.dim();
    // Work on the exactly Hermitian part so roundoff asymmetry cannot bias
    // the rotations.
    CMatrix h(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
    CMatrix v = CMatrix::identity(n);

    const double scale = std::max(h.max_abs(), 1e-300);
    for (int sweep = 0; sweep < 60; ++sweep) {
        if (offdiag_norm(h) <= 1e-16 * scale) break;
        for (int p = 0; p < n - 1; ++p)
            for (int q = p + 1; q < n; ++q)
                if (std::abs(h(p, q)) > 1e-18 * scale) jacobi_rotate(h, v, p, q);
    }

    // Sort ascending; stable so degenerate values keep the basis order.
    std::array<int, 4> idx{0, 1, 2, 3};
    std::stable_sort(idx.begin(), idx.begin() + n,
                     [&](int a, int b) { return h(a, a).real() < h(b, b).real(); });

    EigenSystem sys{std::vector<double>(static_cast<size_t>(n)), CMatrix(n)};
    for (int c = 0; c < n; ++c) {
        sys.values[static_cast<size_t>(c)] = h(idx[static_cast<size_t>(c)], idx[static_cast<size_t>(c)]).real();
        // Phase convention: first component with magnitude > 1e-12 made real
        // and positive, for reproducible downstream purifications.
        Complex phase(1.0, 0.0);
        for (int r = 0; r < n; ++r) {
            const Complex x = v(r, idx[static_cast<size_t>(c)]);
            if (std::abs(x) > 1e-12) {
                phase = std::conj(x) / std::abs(x);
                break;
            }
        }
        for (int r = 0; r < n; ++r) sys.vectors(r, c) = v(r, idx[static_cast<size_t>(c)]) * phase;
    }
    return sys;
}

DensityMatrix::DensityMatrix(const CMatrix& m, double tolerance) : mat_(m), tol_(tolerance) {
    if (m.dim() != 2 && m.dim() != 4) throw Error("DensityMatrix: dim must be 2 or 4");
    if (!m.all_finite()) throw Error("DensityMatrix: non-finite entries");
    const double defect = m.hermiticity_defect();
    if (defect > tol_)
        throw Error("DensityMatrix: not Hermitian, max asymmetry " + std::to_string(defect));
    if (std::abs(m.trace() - Complex(1.0, 0.0)) > tol_)
        throw Error("DensityMatrix: trace != 1 (got " + std::to_string(m.trace().real()) + ")");
    for (double ev : hermitian_eig(mat_, tol_).values)
        if (ev < -tol_)
            throw Error("DensityMatrix: negative eigenvalue " + std::to_string(ev));
}

std::vector<double> DensityMatrix::eigenvalues() const {
    auto vals = hermitian_eig(mat_, tol_).values;
    for (double& v : vals)
        if (v < 0.0) v = 0.0;
    return vals;
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep) {
    if (rho.dim() != 4) throw Error("partial_trace: expects a two-qubit state");
    const CMatrix& r = rho.mat();
    CMatrix out(2);
    if (keep == Subsystem::B) {
        for (int b = 0; b < 2; ++b)
            for (int bp = 0; bp < 2; ++bp) out(b, bp) = r(0 * 2 + b, 0 * 2 + bp) + r(1 * 2 + b, 1 * 2 + bp);
    } else {
        for (int a = 0; a < 2; ++a)
            for (int ap = 0; ap < 2; ++ap) out(a, ap) = r(a * 2 + 0, ap * 2 + 0) + r(a * 2 + 1, ap * 2 + 1);
    }
    return DensityMatrix(out, rho.tolerance());
}

double von_neumann_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double ev : rho.eigenvalues()) {
        if (ev < 1e-14) continue;  // 0 log 0 := 0
        s -= ev * std::log2(ev);
    }
    return s;
}

double linear_entropy(const DensityMatrix& rho) {
    const CMatrix& m = rho.mat();
    double purity = 0.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) purity += std::norm(m(r, c));
    return 2.0 * (1.0 - purity);
}

}  // namespace dsq
