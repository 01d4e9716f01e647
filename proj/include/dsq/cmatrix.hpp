// Small dense complex matrices (dim 2..4) and the spectral utilities the
// rest of the library is built on: Hermitian eigendecomposition, partial
// trace, von Neumann / linear entropy.
//
// Everything here is a pure function on value types; nothing allocates
// beyond the fixed 4x4 storage.

#pragma once

#include <array>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace dsq {

using Complex = std::complex<double>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Physics-domain failures (no resonant phonon, unsupported rate regime, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Initial states outside the validated closed-form set.
struct UnsupportedStateError : Error {
    using Error::Error;
};

/// Reduced state too close to pure for channel extraction.
struct DegenerateReducedState : Error {
    using Error::Error;
};

/// Quadrature / series convergence failures.
struct NumericalError : Error {
    using Error::Error;
};

/// Dense complex matrix of dimension 2, 3 or 4 (3 is used only for the real
/// 3x3 correlation matrix wrapped as a Hermitian problem).
class CMatrix {
  public:
    explicit CMatrix(int dim) : dim_(dim) {
        if (dim < 2 || dim > 4) throw Error("CMatrix: dim must be 2, 3 or 4");
        a_.fill(Complex(0.0, 0.0));
    }

    static CMatrix identity(int dim) {
        CMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return dim_; }

    Complex& operator()(int r, int c) { return a_[static_cast<size_t>(r * dim_ + c)]; }
    const Complex& operator()(int r, int c) const { return a_[static_cast<size_t>(r * dim_ + c)]; }

    CMatrix adjoint() const {
        CMatrix m(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(c, r));
        return m;
    }

    CMatrix transpose() const {
        CMatrix m(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) m(r, c) = (*this)(c, r);
        return m;
    }

    CMatrix conjugate() const {
        CMatrix m(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) m(r, c) = std::conj((*this)(r, c));
        return m;
    }

    Complex trace() const {
        Complex t = 0.0;
        for (int i = 0; i < dim_; ++i) t += (*this)(i, i);
        return t;
    }

    /// max_{rc} |a_rc - conj(a_cr)|
    double hermiticity_defect() const;

    /// max_{rc} |a_rc - b_rc|
    double max_abs_diff(const CMatrix& b) const;

    double max_abs() const;

    bool all_finite() const;

    CMatrix& operator+=(const CMatrix& b);
    CMatrix& operator-=(const CMatrix& b);
    CMatrix& operator*=(Complex s);

    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
    friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);

  private:
    int dim_;
    std::array<Complex, 16> a_{};
};

/// Eigenvalues ascending; eigenvectors are the orthonormal columns of
/// `vectors`, phase-fixed so the first component of magnitude > 1e-12 is
/// real and positive.
struct EigenSystem {
    std::vector<double> values;
    CMatrix vectors;
};

/// Cyclic complex Jacobi diagonalization. Deterministic: identical input
/// gives identical output, and an already-diagonal matrix keeps the
/// computational basis.
EigenSystem hermitian_eig(const CMatrix& m, double herm_tol = 1e-9);

/// Hermitian, unit-trace, positive-semidefinite matrix; invariants are
/// enforced at construction.
class DensityMatrix {
  public:
    explicit DensityMatrix(const CMatrix& m, double tolerance = 1e-9);

    const CMatrix& mat() const { return mat_; }
    int dim() const { return mat_.dim(); }
    double tolerance() const { return tol_; }

    /// Spectrum (ascending), clamping eigenvalues in [-tol, 0] to 0.
    std::vector<double> eigenvalues() const;

  private:
    CMatrix mat_;
    double tol_;
};

enum class Subsystem { A, B };

/// Reduce a two-qubit state (basis |00>,|01>,|10>,|11>, first label = A) to
/// the kept qubit.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep);

/// S = -tr rho log2 rho, in bits. Eigenvalues below 1e-14 contribute zero.
double von_neumann_entropy(const DensityMatrix& rho);

/// S2 = 2 (1 - tr rho^2).
double linear_entropy(const DensityMatrix& rho);

/// Kronecker product of two qubit matrices.
CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace dsq
