// Seeded, platform-independent random numbers for the validation suite and
// tests (std distributions are not reproducible across standard libraries).

#pragma once

#include <cstdint>

#include "dsq/cmatrix.hpp"
#include "dsq/dynamics.hpp"

namespace dsq {

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal (Box-Muller).
    double normal();

    Complex complex_normal() { return Complex(normal(), normal()); }

  private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Random Hermitian matrix with independent normal entries.
CMatrix random_hermitian(Rng& rng, int dim);

/// Haar-like random pure two-qubit state projector.
CMatrix random_pure_state(Rng& rng, int dim);

/// Random full-rank density matrix (Wishart-like).
DensityMatrix random_density_matrix(Rng& rng, int dim);

/// Rank-2 two-qubit state: p |psi1><psi1| + (1-p) |psi2><psi2| with
/// orthonormal random psi_i and p uniform.
ProductState random_rank2_state(Rng& rng);

/// Random unitary from the eigenbasis of a random Hermitian matrix.
CMatrix random_unitary(Rng& rng, int dim);

}  // namespace dsq
