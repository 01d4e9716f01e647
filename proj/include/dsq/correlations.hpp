// Correlation measures of a two-qubit state: Wootters concurrence, quantum
// mutual information, the Renyi-2 classical correlation built from the
// symmetric purification of rho_B and the extracted qubit channel, the
// resulting discord, and a von Neumann measurement-optimization route kept
// as an independent cross-check.

#pragma once

#include <array>

#include "dsq/cmatrix.hpp"
#include "dsq/dynamics.hpp"

namespace dsq {

/// Prefactor of the Renyi-2 classical correlation
/// C2 = prefactor * S2(rho_B) * lambda_max(L^T L).
/// The value 1 makes a Bell state give C2 = 1, matching the von Neumann
/// classical correlation there.
inline constexpr double kC2Prefactor = 1.0;

/// Wootters concurrence from the spin-flipped spectrum.
double concurrence(const ProductState& ps);

/// I = S(rho_A) + S(rho_B) - S(rho_AB), in bits.
double mutual_information(const ProductState& ps);

/// Symmetric two-qubit purification |r> of a qubit state rho_B:
/// r = sum_i sqrt(lambda_i) |phi_i><phi_i*| as a symmetric 2x2 amplitude
/// matrix [[A, B], [B, D]]. Eigenvalues are ordered lambda1 >= lambda2 and
/// phases follow the hermitian_eig convention, so the purification is
/// reproducible. A, B, D are real whenever rho_B is real.
struct Purification {
    Complex A, B, D;
    double lambda1, lambda2;
    std::array<Complex, 2> evec1, evec2;
};

Purification purify(const DensityMatrix& rho_b);

/// The four B-indexed 2x2 blocks of rho: beta_ij[a,a'] = rho[(a,i),(a',j)],
/// so that sum_ij beta_ij (x) |i><j| reassembles rho exactly.
struct BetaBlocks {
    CMatrix b00, b01, b10, b11;
};

BetaBlocks beta_blocks(const ProductState& ps);

/// Operator images Lambda(|i><j|) of the channel mapping the purification
/// ancilla to subsystem A.
struct ChannelImages {
    CMatrix im00, im01, im10, im11;
};

/// Solves beta = r Lambda conj(r) blockwise for the channel images. Throws
/// DegenerateReducedState when an eigenvalue of rho_B falls below
/// rank_tolerance (callers fall back to C2 = 0 there).
ChannelImages extract_channel(const ProductState& ps, double rank_tolerance = 1e-7);

/// (Lambda (x) id) applied to the purification projector; equals rho when
/// the extraction is well posed. Used by tests and the validation suite.
CMatrix reconstruct_from_channel(const ChannelImages& ch, const Purification& pur);

/// 3x3 real correlation matrix L_ij = tr[Lambda(sigma_j) sigma_i] / 2.
struct LMatrix {
    std::array<std::array<double, 3>, 3> m;

    /// Largest eigenvalue of L^T L.
    double max_lambda_ltl() const;
};

LMatrix l_matrix(const ChannelImages& ch);

/// Renyi-2 classical correlation C2 = prefactor * S2(rho_B) * lmax(L^T L);
/// zero when rho_B is (numerically) pure.
double classical_correlation_c2(const ProductState& ps, double prefactor = kC2Prefactor);

/// Q = I - C2, clamped to 0 when |Q| < 1e-9.
double quantum_discord(const ProductState& ps);

/// Classical correlation with von Neumann entropies, maximized over rank-1
/// projective measurements on B via a deterministic Bloch-sphere grid with
/// 20 window-halving refinement passes.
double vn_classical_correlation(const ProductState& ps, int grid_n = 64);

/// Q_vN = I - vn_classical_correlation.
double vn_discord(const ProductState& ps);

}  // namespace dsq
