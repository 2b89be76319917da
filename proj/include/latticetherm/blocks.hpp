#pragma once

#include "latticetherm/gaussian.hpp"
#include "latticetherm/lattice.hpp"

#include <span>
#include <vector>

namespace ltherm {

/// A contiguous segment (1D) or axis-aligned square (2D) of lattice sites,
/// together with the complementary rest. block_size is n_B in 1D and l_B
/// in 2D (so the block holds l_B^2 modes). Blocks are anchored at the
/// origin by default; offset shifts them along every axis (the physics is
/// translation invariant, the anchor only fixes golden files).
struct BlockSelection {
    LatticeSpec spec;
    int block_size = 0;
    std::vector<int> block;
    std::vector<int> rest;

    int n_block_modes() const { return static_cast<int>(block.size()); }

    static BlockSelection make(const LatticeSpec& spec, int size, int offset = 0);
};

/// Core/shell layering of a block. Indices are local to the block
/// (0 .. n_B-1 in the block's own ordering), so they can be fed straight
/// into reduce() on both the reduced block state and the reference state.
struct CoreShellSplit {
    int layers = 0;
    std::vector<int> core;
    std::vector<int> shell;
};

// Schur complement of V over the dropped indices: the effective potential
// on `keep` after eliminating `drop`. Solved through a Cholesky
// factorisation of V(drop, drop), never an explicit inverse.
Matrix schur_complement(const Matrix& V, std::span<const int> keep, std::span<const int> drop);

// V' = V_B - V_BR V_R^{-1} V_BR^T. Temperature never enters.
Matrix effective_potential(const Matrix& V, const BlockSelection& sel);

// Thermal state of the standalone block Hamiltonian with potential
// v_prime (dense eigendecomposition path).
CovarianceMatrix reference_thermal(const Matrix& v_prime, double beta);

// Peel `layers` boundary layers off the block. 1D distance is to the
// nearer segment end, 2D is Chebyshev distance to the nearest block edge.
CoreShellSplit core_shell_split(const BlockSelection& sel, int layers);

// Reference state built from a block padded by pad_layers sites per side:
// take the effective potential of the padded region, its thermal state,
// and trace the padding back out. With bare_subblock the padded region's
// potential is the raw submatrix of V instead of the Schur complement
// (kept for comparison; it fails the high-temperature requirement).
CovarianceMatrix padded_reference(const Matrix& V, const BlockSelection& sel,
                                  int pad_layers, double beta,
                                  bool bare_subblock = false);

// Block-vs-rest partition of the full lattice.
Partition partition_of(const BlockSelection& sel);

}
