#pragma once

#include "latticetherm/blocks.hpp"
#include "latticetherm/gaussian.hpp"
#include "latticetherm/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ltherm {

enum class Observable {
    intensive_fidelity,
    mutual_information,
    log_negativity,
    core_fidelity,
    shell_fidelity,
};

std::string observable_name(Observable o);

/// Fit of a sweep series. 2D series get an OLS line over the largest half
/// of the abscissa range (alpha = |slope|); 1D series get the saturation
/// value (mean of the last 3 points) with their spread. residual is the
/// RMS misfit divided by the mean |value| over the fit window.
struct FitRecord {
    bool is_saturation = false;
    double alpha = 0.0;
    double slope = 0.0;
    double intercept = 0.0;
    double residual = 0.0;
    double saturation = 0.0;
    double spread = 0.0;
};

/// One observable as a function of block size. abscissa is n_B in 1D and
/// l_B in 2D; layers only applies to core/shell fidelities.
struct SweepSeries {
    Observable tag = Observable::intensive_fidelity;
    int dim = 1;
    int layers = 0;
    std::vector<double> abscissa;
    std::vector<double> values;
    std::optional<FitRecord> fit;
};

struct SweepOptions {
    // l_S for every point; 0 (2D only) means the scaling family l_S = 2 l_B.
    int fixed_linear_size = 0;
    int layers = 1;
    int workers = 1;
};

struct CorrelationLengthResult {
    bool uncorrelated = false; // all |g(r)| at or below the noise floor
    double xi = 0.0;           // +inf when the fitted decay rate is ~0
    double slope = 0.0;
    double residual = 0.0;
    int n_points = 0;
};

struct PhaseCell {
    double alpha_F = 0.0;
    double alpha_I = 0.0;
    double alpha_E = 0.0;
    CorrelationLengthResult xi;
    bool skipped = false;  // near-critical floor
    std::string error;     // nonempty if this cell failed
};

struct PhaseDiagram {
    std::vector<double> c_grid;
    std::vector<double> beta_grid;
    std::vector<PhaseCell> cells; // row-major: i_c * beta_grid.size() + i_b

    const PhaseCell& at(int ic, int ib) const {
        return cells.at(static_cast<size_t>(ic) * beta_grid.size() + ib);
    }
};

struct PhaseDiagramOptions {
    int linear_size = 20;
    std::vector<int> sizes = {4, 6, 8, 10};
    int workers = 1;
};

// F_I = F[rho_B(beta), Omega'_B(beta)]: reduced block of the full thermal
// state against the thermal state of the effective block potential.
double intensive_fidelity(const LatticeSpec& spec, const BlockSelection& sel, double beta);

// Both states entering F_I, exposed so core/shell comparisons can reduce
// them consistently.
struct BlockComparison {
    CovarianceMatrix reduced;   // rho_B
    CovarianceMatrix reference; // Omega'_B
};
BlockComparison block_comparison(const LatticeSpec& spec, const BlockSelection& sel, double beta);

// One series per requested observable, evaluated over the block sizes.
// 2D with fixed_linear_size == 0 uses the family l_S = 2 l_B per point.
std::vector<SweepSeries> block_size_sweep(int dim, double c, double beta,
                                          const std::vector<int>& sizes,
                                          const std::vector<Observable>& observables,
                                          const SweepOptions& opt = {});

// Requires >= 4 points.
FitRecord slope_fit(const SweepSeries& series);

// Two-point function g(r) = Q(0, r e_x) fitted to exp(-r/xi) over
// r in [1, l_S/4], on ln|g|. Requires >= 3 points above the 1e-12 floor.
CorrelationLengthResult correlation_length(const LatticeSpec& spec, double beta);

// Fig.-4-style grid: per (c, beta) cell, sweep the size schedule, fit
// alpha_F / alpha_I / alpha_E and attach the correlation length.
// Cells failing validation are recorded, not fatal. 2D only.
PhaseDiagram phase_diagram(const std::vector<double>& c_grid,
                           const std::vector<double>& beta_grid,
                           const PhaseDiagramOptions& opt = {});

// Spearman rank correlation with average ranks for ties.
double spearman(const std::vector<double>& a, const std::vector<double>& b);

}
