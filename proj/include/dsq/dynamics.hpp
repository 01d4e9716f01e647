// Two-qubit dissipative dynamics in the rotating frame: the collective
// (Dicke) basis |e>, |s>, |a>, |g>, the closed-form solution of the master
// equation for the validated family of initial states, and a fixed-step
// RK4 integration of the full generator as an independent numerical route.

#pragma once

#include <vector>

#include "dsq/bec.hpp"
#include "dsq/cmatrix.hpp"

namespace dsq {

/// Two-qubit state in the product basis |e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>.
class ProductState {
  public:
    explicit ProductState(const DensityMatrix& rho) : rho_(rho) {
        if (rho.dim() != 4) throw Error("ProductState: needs a two-qubit state");
    }
    const DensityMatrix& rho() const { return rho_; }

  private:
    DensityMatrix rho_;
};

/// Two-qubit state in the Dicke basis |e>, |s>, |a>, |g> with
/// |s>, |a> = (|e1 g2> +- |g1 e2>)/sqrt(2).
class DickeState {
  public:
    explicit DickeState(const DensityMatrix& rho) : rho_(rho) {
        if (rho.dim() != 4) throw Error("DickeState: needs a two-qubit state");
    }
    const DensityMatrix& rho() const { return rho_; }

  private:
    DensityMatrix rho_;
};

DickeState to_dicke(const ProductState& ps);
ProductState to_product(const DickeState& ds);

/// Closed-form propagation of the master equation in the Dicke basis.
///
/// Valid for initial states whose only nonzero coherences are rho_eg and
/// rho_sa (all scenario states qualify); anything else raises
/// UnsupportedStateError and should go through integrate_master. Requires
/// |Gamma| < gamma strictly.
DickeState evolve_closed_form(const DickeState& rho0, const RateSet& r, double t);

/// Right-hand side of the master equation in the product basis:
///   i eta [s+1 s-2 + s+2 s-1, rho]
///   + sum_ij Gamma_ij (s-j rho s+i - 1/2 {s+i s-j, rho}),
/// Gamma_ii = gamma, Gamma_12 = Gamma_21 = Gamma. The qubit Hamiltonian is
/// dropped (rotating frame); lab-frame phases can be reapplied afterwards.
CMatrix liouvillian_apply(const ProductState& ps, const RateSet& r);

/// Fixed-step classical RK4 for the generator above, with Hermitian
/// symmetrization each step. Throws if trace or positivity drift beyond
/// 1e-6 (advice: reduce dt).
ProductState integrate_master(const ProductState& rho0, const RateSet& r, double t_end, double dt);

/// Dense output at the requested sample times (ascending, >= 0).
std::vector<ProductState> integrate_master_dense(const ProductState& rho0, const RateSet& r,
                                                 const std::vector<double>& sample_times, double dt);

}  // namespace dsq
