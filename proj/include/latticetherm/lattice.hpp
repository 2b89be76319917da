#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

namespace ltherm {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Periodic harmonic lattice with nearest-neighbour coupling c and unit
/// on-site frequency. dim = 1 gives a ring of linear_size oscillators,
/// dim = 2 a linear_size x linear_size torus. Mode indexing is row-major:
/// k = x + linear_size * y.
struct LatticeSpec {
    int dim = 1;
    int linear_size = 0;   // l_S
    double coupling = 0.0; // c, valid range [0, 1/2^dim)

    int n_modes() const;
    int mode_index(int x, int y = 0) const;

    // Throws std::invalid_argument naming the offending field.
    void validate() const;
};

/// Eigenvalues of the potential matrix V, ascending. For the periodic
/// lattice these are known in closed form from the Fourier modes.
struct ModeSpectrum {
    std::vector<double> eigenvalues;

    double min() const { return eigenvalues.front(); }
    double max() const { return eigenvalues.back(); }
};

// Nearest-neighbour potential matrix: 1D circulant with first row
// (1, -c, 0, ..., 0, -c); 2D block-circulant with V_1 blocks on the
// diagonal and -c*I between vertically adjacent rows of sites.
Matrix build_potential(const LatticeSpec& spec);

// lambda_k = 1 - 2c sum_axes cos(2 pi k_axis / l_S), sorted ascending.
ModeSpectrum potential_spectrum(const LatticeSpec& spec);

// f(V) synthesised in the Fourier eigenbasis. f must be finite on
// [min lambda, max lambda]. Exact symmetry by construction.
Matrix matrix_function(const LatticeSpec& spec, const std::function<double(double)>& f);

// Relative symmetry check used by validation paths.
bool is_symmetric(const Matrix& m, double rel_tol = 1e-12);

// Eigenvalues that would make V^{-1/2} lose all precision are rejected
// even when c is formally inside the valid range.
inline constexpr double kSpectrumFloor = 1e-13;

}
