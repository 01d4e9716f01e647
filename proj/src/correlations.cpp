#include "dsq/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace dsq {

namespace {

CMatrix matrix_sqrt_psd(const CMatrix& m) {
    const EigenSystem es = hermitian_eig(m);
    CMatrix out(m.dim());
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) {
            Complex s = 0.0;
            for (int k = 0; k < m.dim(); ++k) {
                const double ev = std::max(es.values[static_cast<size_t>(k)], 0.0);
                s += es.vectors(r, k) * std::sqrt(ev) * std::conj(es.vectors(c, k));
            }
            out(r, c) = s;
        }
    return out;
}

const CMatrix& sigma_y_pair() {
    static const CMatrix yy = [] {
        CMatrix y(2);
        y(0, 1) = Complex(0.0, -1.0);
        y(1, 0) = Complex(0.0, 1.0);
        return kron(y, y);
    }();
    return yy;
}

}  // namespace

double concurrence(const ProductState& ps) {
    const CMatrix& rho = ps.rho().mat();
    const CMatrix spin_flipped = sigma_y_pair() * rho.conjugate() * sigma_y_pair();
    // Eigenvalues of rho * rho~ equal those of the Hermitian
    // sqrt(rho) rho~ sqrt(rho).
    const CMatrix root = matrix_sqrt_psd(rho);
    CMatrix h = root * spin_flipped * root;
    const double defect = h.hermiticity_defect();
    if (defect > 1e-8)
        throw NumericalError("concurrence: spin-flip product not Hermitian, residual " +
                             std::to_string(defect));
    auto vals = hermitian_eig(h, 1e-8).values;  // ascending
    for (double& v : vals) v = std::sqrt(std::max(v, 0.0));
    const double c = vals[3] - vals[2] - vals[1] - vals[0];
    return std::max(0.0, c);
}

double mutual_information(const ProductState& ps) {
    const double sa = von_neumann_entropy(partial_trace(ps.rho(), Subsystem::A));
    const double sb = von_neumann_entropy(partial_trace(ps.rho(), Subsystem::B));
    const double sab = von_neumann_entropy(ps.rho());
    return sa + sb - sab;
}

Purification purify(const DensityMatrix& rho_b) {
    if (rho_b.dim() != 2) throw Error("purify: expects a qubit state");
    const EigenSystem es = hermitian_eig(rho_b.mat(), rho_b.tolerance());
    Purification p{};
    p.lambda1 = std::max(es.values[1], 0.0);  // descending order
    p.lambda2 = std::max(es.values[0], 0.0);
    p.evec1 = {es.vectors(0, 1), es.vectors(1, 1)};
    p.evec2 = {es.vectors(0, 0), es.vectors(1, 0)};
    const double s1 = std::sqrt(p.lambda1);
    const double s2 = std::sqrt(p.lambda2);
    p.A = s1 * p.evec1[0] * p.evec1[0] + s2 * p.evec2[0] * p.evec2[0];
    p.B = s1 * p.evec1[0] * p.evec1[1] + s2 * p.evec2[0] * p.evec2[1];
    p.D = s1 * p.evec1[1] * p.evec1[1] + s2 * p.evec2[1] * p.evec2[1];
    return p;
}

BetaBlocks beta_blocks(const ProductState& ps) {
    const CMatrix& r = ps.rho().mat();
    BetaBlocks b{CMatrix(2), CMatrix(2), CMatrix(2), CMatrix(2)};
    CMatrix* blocks[2][2] = {{&b.b00, &b.b01}, {&b.b10, &b.b11}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int a = 0; a < 2; ++a)
                for (int ap = 0; ap < 2; ++ap) (*blocks[i][j])(a, ap) = r(2 * a + i, 2 * ap + j);
    return b;
}

ChannelImages extract_channel(const ProductState& ps, double rank_tolerance) {
    const DensityMatrix rho_b = partial_trace(ps.rho(), Subsystem::B);
    const Purification pur = purify(rho_b);
    if (pur.lambda2 < rank_tolerance)
        throw DegenerateReducedState("extract_channel: rho_B eigenvalue " +
                                     std::to_string(pur.lambda2) + " below rank tolerance");

    // r = [[A,B],[B,D]] symmetric; invert once, the block solve is
    // Lambda = r^-1 beta conj(r)^-1 element-slice by element-slice.
    const Complex det = pur.A * pur.D - pur.B * pur.B;
    const Complex inv[2][2] = {{pur.D / det, -pur.B / det}, {-pur.B / det, pur.A / det}};

    const CMatrix& rho = ps.rho().mat();
    ChannelImages ch{CMatrix(2), CMatrix(2), CMatrix(2), CMatrix(2)};
    CMatrix* images[2][2] = {{&ch.im00, &ch.im01}, {&ch.im10, &ch.im11}};
    for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap) {
            Complex beta[2][2];
            for (int bI = 0; bI < 2; ++bI)
                for (int bJ = 0; bJ < 2; ++bJ) beta[bI][bJ] = rho(2 * a + bI, 2 * ap + bJ);
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    Complex s = 0.0;
                    for (int bI = 0; bI < 2; ++bI)
                        for (int bJ = 0; bJ < 2; ++bJ)
                            s += inv[k][bI] * beta[bI][bJ] * std::conj(inv[l][bJ]);
                    (*images[k][l])(a, ap) = s;
                }
        }
    return ch;
}

CMatrix reconstruct_from_channel(const ChannelImages& ch, const Purification& pur) {
    const Complex r[2][2] = {{pur.A, pur.B}, {pur.B, pur.D}};
    const CMatrix* images[2][2] = {{&ch.im00, &ch.im01}, {&ch.im10, &ch.im11}};
    CMatrix out(4);
    for (int a = 0; a < 2; ++a)
        for (int ap = 0; ap < 2; ++ap)
            for (int b = 0; b < 2; ++b)
                for (int bp = 0; bp < 2; ++bp) {
                    Complex s = 0.0;
                    for (int k = 0; k < 2; ++k)
                        for (int l = 0; l < 2; ++l)
                            s += (*images[k][l])(a, ap) * r[k][b] * std::conj(r[l][bp]);
                    out(2 * a + b, 2 * ap + bp) = s;
                }
    return out;
}

LMatrix l_matrix(const ChannelImages& ch) {
    const CMatrix lx = ch.im01 + ch.im10;
    const CMatrix ly = Complex(0.0, -1.0) * ch.im01 + Complex(0.0, 1.0) * ch.im10;
    const CMatrix lz = ch.im00 - ch.im11;
    const CMatrix* img[3] = {&lx, &ly, &lz};

    LMatrix l{};
    double residual = 0.0;
    for (int j = 0; j < 3; ++j) {
        const CMatrix& m = *img[j];
        // tr[M sigma_i] / 2 for i = x, y, z.
        const Complex tx = 0.5 * (m(0, 1) + m(1, 0));
        const Complex ty = 0.5 * (Complex(0.0, 1.0) * m(0, 1) - Complex(0.0, 1.0) * m(1, 0));
        const Complex tz = 0.5 * (m(0, 0) - m(1, 1));
        const Complex t[3] = {tx, ty, tz};
        for (int i = 0; i < 3; ++i) {
            residual = std::max(residual, std::abs(t[i].imag()));
            l.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = t[i].real();
        }
    }
    if (residual > 1e-9)
        throw NumericalError("l_matrix: imaginary residue " + std::to_string(residual));
    return l;
}

double LMatrix::max_lambda_ltl() const {
    CMatrix ltl(3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k)
                s += m[static_cast<size_t>(k)][static_cast<size_t>(i)] *
                     m[static_cast<size_t>(k)][static_cast<size_t>(j)];
            ltl(i, j) = s;
        }
    return hermitian_eig(ltl).values[2];
}

double classical_correlation_c2(const ProductState& ps, double prefactor) {
    const DensityMatrix rho_b = partial_trace(ps.rho(), Subsystem::B);
    const double s2 = linear_entropy(rho_b);
    try {
        const ChannelImages ch = extract_channel(ps);
        return prefactor * s2 * l_matrix(ch).max_lambda_ltl();
    } catch (const DegenerateReducedState&) {
        if (s2 > 5e-7) throw;  // extraction should have been well posed
        return 0.0;            // pure rho_B carries no classical correlation
    }
}

double quantum_discord(const ProductState& ps) {
    const double q = mutual_information(ps) - classical_correlation_c2(ps);
    return std::abs(q) < 1e-9 ? 0.0 : q;
}

namespace {

double entropy2_bits(double l1, double l2) {
    double s = 0.0;
    if (l1 > 1e-14) s -= l1 * std::log2(l1);
    if (l2 > 1e-14) s -= l2 * std::log2(l2);
    return s;
}

// S(rho_A) - sum_j p_j S(rho_A | outcome j) for measurement direction n.
double holevo_value(const CMatrix& rho, double s_a, double nx, double ny, double nz) {
    double total = s_a;
    for (int sign = -1; sign <= 1; sign += 2) {
        // Pi = (I + sign n.sigma)/2 on B.
        const Complex p00(0.5 * (1.0 + sign * nz), 0.0);
        const Complex p11(0.5 * (1.0 - sign * nz), 0.0);
        const Complex p01(0.5 * sign * nx, -0.5 * sign * ny);
        const Complex p10 = std::conj(p01);
        // M[a,a'] = sum_{b,b''} rho[(a,b),(a',b'')] Pi[b'',b]
        Complex mm[2][2];
        for (int a = 0; a < 2; ++a)
            for (int ap = 0; ap < 2; ++ap) {
                Complex s = rho(2 * a + 0, 2 * ap + 0) * p00 + rho(2 * a + 0, 2 * ap + 1) * p10 +
                            rho(2 * a + 1, 2 * ap + 0) * p01 + rho(2 * a + 1, 2 * ap + 1) * p11;
                mm[a][ap] = s;
            }
        const double p = (mm[0][0] + mm[1][1]).real();
        if (p < 1e-14) continue;
        const double tr = p;
        const double det = (mm[0][0] * mm[1][1] - mm[0][1] * mm[1][0]).real();
        const double disc = std::sqrt(std::max(tr * tr - 4.0 * det, 0.0));
        const double l1 = std::clamp(0.5 * (tr + disc) / p, 0.0, 1.0);
        const double l2 = std::clamp(0.5 * (tr - disc) / p, 0.0, 1.0);
        total -= p * entropy2_bits(l1, l2);
    }
    return total;
}

}  // namespace

double vn_classical_correlation(const ProductState& ps, int grid_n) {
    if (grid_n < 4) throw Error("vn_classical_correlation: grid_n too small");
    const CMatrix& rho = ps.rho().mat();
    const double s_a = von_neumann_entropy(partial_trace(ps.rho(), Subsystem::A));

    double best = 0.0, best_th = 0.0, best_ph = 0.0;
    for (int i = 0; i < grid_n; ++i) {
        const double th = M_PI * (i + 0.5) / grid_n;
        const double st = std::sin(th), ct = std::cos(th);
        for (int j = 0; j < grid_n; ++j) {
            const double ph = 2.0 * M_PI * j / grid_n;
            const double v = holevo_value(rho, s_a, st * std::cos(ph), st * std::sin(ph), ct);
            if (v > best) {
                best = v;
                best_th = th;
                best_ph = ph;
            }
        }
    }

    // 20 window-halving passes of local 9x9 refinement.
    double w_th = M_PI / grid_n, w_ph = 2.0 * M_PI / grid_n;
    for (int pass = 0; pass < 20; ++pass) {
        double loc_best = best, loc_th = best_th, loc_ph = best_ph;
        for (int i = -4; i <= 4; ++i)
            for (int j = -4; j <= 4; ++j) {
                const double th = best_th + w_th * i / 4.0;
                const double ph = best_ph + w_ph * j / 4.0;
                const double st = std::sin(th), ct = std::cos(th);
                const double v = holevo_value(rho, s_a, st * std::cos(ph), st * std::sin(ph), ct);
                if (v > loc_best) {
                    loc_best = v;
                    loc_th = th;
                    loc_ph = ph;
                }
            }
        best = loc_best;
        best_th = loc_th;
        best_ph = loc_ph;
        w_th *= 0.5;
        w_ph *= 0.5;
    }
    return std::max(best, 0.0);
}

double vn_discord(const ProductState& ps) {
    return mutual_information(ps) - vn_classical_correlation(ps);
}

}  // namespace dsq
