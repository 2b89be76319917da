#pragma once

#include "latticetherm/gaussian.hpp"
#include "latticetherm/lattice.hpp"

namespace ltherm::oracle {

/// Density matrix of a 1- or 2-mode system in the truncated Fock basis
/// |n_0> or |n_0, n_1> (flat index n_0 * cutoff + n_1). Every operator this
/// module exponentiates is real in this basis, so entries are stored as a
/// real symmetric matrix (the Hermitian imaginary parts vanish identically).
struct FockDensityMatrix {
    int n_modes = 1;
    int cutoff = 0;
    Matrix rho;

    // Largest diagonal weight among states with a mode at the top Fock
    // level; the cutoff-adequacy signal.
    double tail_weight = 0.0;
};

// Thermal state exp(-beta H)/Z of H = (q^T V q + p^T p)/2 with
// q = (a + a^dag)/sqrt(2), p = i(a^dag - a)/sqrt(2), built by dense
// eigendecomposition. The 1/2 makes the ground state of V = identity
// have unit covariance, matching the Gaussian module's convention.
// Throws when the cutoff is too small (tail weight above 1e-8) unless
// allow_marginal_cutoff is set; the weight stays inspectable either way.
FockDensityMatrix fock_thermal(const Matrix& V, double beta, int cutoff,
                               bool allow_marginal_cutoff = false);

inline constexpr double kTailThreshold = 1e-8;

// Uhlmann fidelity Tr[sqrt(sqrt(r1) r2 sqrt(r1))]^... evaluated by dense
// symmetric square roots.
double fock_fidelity(const FockDensityMatrix& r1, const FockDensityMatrix& r2);

// Von Neumann entropy in nats.
double fock_entropy(const FockDensityMatrix& r);

// ln ||rho^{T_1}||_1 for the mode-0 vs mode-1 split (2-mode states only).
double fock_negativity(const FockDensityMatrix& r);

// Partial trace down to a single kept mode (2-mode states only).
FockDensityMatrix fock_reduce(const FockDensityMatrix& r, int keep_mode);

// Second moments as a Gaussian covariance matrix (Q = 2<qq>, P = 2<pp>);
// the q-p cross moments vanish identically in this representation.
CovarianceMatrix fock_covariance(const FockDensityMatrix& r);

}
