#pragma once

#include "latticetherm/analysis.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ltherm {

enum class Experiment {
    fidelity,
    sweep,
    core_shell,
    padded,
    correlation_length,
    phase_diagram,
    oracle_check,
};

std::string experiment_name(Experiment e);

/// Fully validated run description. Every module precondition is checked
/// up front by validate(); invalid configs throw std::invalid_argument
/// naming the offending field before any work starts.
struct RunConfig {
    Experiment experiment = Experiment::sweep;

    int dim = 1;
    int linear_size = 0;          // 0 in 2D sweeps = scaling family l_S = 2 l_B
    std::vector<double> c_grid;   // single value for non-grid experiments
    std::vector<double> beta_grid;
    std::vector<int> sizes;       // block sizes: n_B (1D) or l_B (2D)
    std::vector<Observable> observables = {Observable::intensive_fidelity,
                                           Observable::mutual_information,
                                           Observable::log_negativity};
    int layers = 1;               // core/shell peel depth
    int pad_layers = 2;           // epsilon for the padded reference
    std::string out_dir = "results";
    int workers = 1;
    bool keep_going = false;
    unsigned seed = 0;            // reserved; all computations deterministic

    void validate() const;
};

// Executes the experiment and writes results.csv, results.json and
// manifest.json into out_dir. Returns the process exit status: 0 on
// success, 2 when a cell failed (unless keep_going embedded it).
int run(const RunConfig& config);

// CSV/JSON text for a finished run, exposed for golden-file tests.
struct RunArtifacts {
    std::string csv;
    std::string json;
    int exit_status = 0;
};
RunArtifacts render_run(const RunConfig& config);

}
