#pragma once

#include "latticetherm/lattice.hpp"

#include <span>
#include <vector>

namespace ltherm {

/// Zero-mean Gaussian state in the convention where the ground state of
/// V = identity has unit covariance (symplectic eigenvalues nu >= 1,
/// nu = 2 nbar + 1 for a thermal mode). Q holds the position block,
/// P the momentum block; the cross block is identically zero for every
/// state this library produces, so it is never stored.
struct CovarianceMatrix {
    Matrix Q;
    Matrix P;

    int n_modes() const { return static_cast<int>(Q.rows()); }
};

/// Bipartition of the modes of a state. block and rest are disjoint,
/// both nonempty, and together cover all modes.
struct Partition {
    std::vector<int> block;
    std::vector<int> rest;

    static Partition make(int n_modes, std::vector<int> block_modes);
    void validate(int n_modes) const;
};

// Symplectic eigenvalues nu below 1 by more than this are a bug, not noise.
inline constexpr double kPhysicalTol = 1e-6;
// Below 1 by less than this they are clipped to exactly 1.
inline constexpr double kClipTol = 1e-9;

// Thermal state covariance gamma(beta) = V^{-1/2} W  (+)  V^{1/2} W with
// W = coth(beta V^{1/2} / 2). beta = +infinity gives the ground state.
// The LatticeSpec overload evaluates W through the analytic Fourier
// spectrum; the Matrix overload takes any positive definite potential
// (e.g. an effective block potential) and uses a dense eigendecomposition.
CovarianceMatrix thermal_covariance(const LatticeSpec& spec, double beta);
CovarianceMatrix thermal_covariance(const Matrix& potential, double beta);

// Gaussian partial trace: keep the selected modes, in the given order.
CovarianceMatrix reduce(const CovarianceMatrix& cm, std::span<const int> modes);

// Williamson eigenvalues nu_k = sqrt(eig(Q P)), descending. Throws if the
// state violates the uncertainty relation beyond kPhysicalTol.
std::vector<double> symplectic_spectrum(const CovarianceMatrix& cm);

// Von Neumann entropy in nats: sum_k h(nu_k).
double entropy(const CovarianceMatrix& cm);

// h(nu) = ((nu+1)/2) ln((nu+1)/2) - ((nu-1)/2) ln((nu-1)/2), h(1) = 0.
double entropy_term(double nu);

// I = S(block) + S(rest) - S(total), in nats.
double mutual_information(const CovarianceMatrix& cm, const Partition& part);

// Logarithmic negativity of the block-vs-rest split: flip the block's
// momentum signs, E_N = sum_k max(0, -ln nu~_k), in nats.
double log_negativity(const CovarianceMatrix& cm, const Partition& part);

// Uhlmann fidelity of two zero-mean Gaussian states, in [0, 1].
double fidelity(const CovarianceMatrix& a, const CovarianceMatrix& b);

}
