#include "latticetherm/lattice.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ltherm {

int LatticeSpec::n_modes() const {
    return dim == 1 ? linear_size : linear_size * linear_size;
}

int LatticeSpec::mode_index(int x, int y) const {
    return x + linear_size * y;
}

void LatticeSpec::validate() const {
    if (dim != 1 && dim != 2)
        throw std::invalid_argument(fmt::format("dim: must be 1 or 2, got {}", dim));
    if (linear_size < 3)
        throw std::invalid_argument(
            fmt::format("linear_size: must be >= 3, got {}", linear_size));
    const double cmax = 1.0 / (dim == 1 ? 2.0 : 4.0);
    if (!(coupling >= 0.0) || coupling >= cmax)
        throw std::invalid_argument(fmt::format(
            "coupling: must lie in [0, {}) for dim={}, got {}", cmax, dim, coupling));
    // Guard against spectra too close to critical for V^{-1/2}.
    const double min_lambda = 1.0 - 2.0 * dim * coupling;
    if (min_lambda < kSpectrumFloor)
        throw std::invalid_argument(fmt::format(
            "coupling: smallest potential eigenvalue {} is below the numerical floor {}",
            min_lambda, kSpectrumFloor));
}

bool is_symmetric(const Matrix& m, double rel_tol) {
    if (m.rows() != m.cols()) return false;
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    return (m - m.transpose()).cwiseAbs().maxCoeff() <= rel_tol * scale;
}

Matrix build_potential(const LatticeSpec& spec) {
    spec.validate();
    const int l = spec.linear_size;
    const double c = spec.coupling;
    const int n = spec.n_modes();
    Matrix V = Matrix::Zero(n, n);
    if (spec.dim == 1) {
        for (int i = 0; i < l; ++i) {
            V(i, i) = 1.0;
            V(i, (i + 1) % l) = -c;
            V(i, (i + l - 1) % l) = -c;
        }
    } else {
        for (int y = 0; y < l; ++y) {
            for (int x = 0; x < l; ++x) {
                const int i = spec.mode_index(x, y);
                V(i, i) = 1.0;
                V(i, spec.mode_index((x + 1) % l, y)) = -c;
                V(i, spec.mode_index((x + l - 1) % l, y)) = -c;
                V(i, spec.mode_index(x, (y + 1) % l)) = -c;
                V(i, spec.mode_index(x, (y + l - 1) % l)) = -c;
            }
        }
    }
    return V;
}

namespace {

// cos(2 pi m / l) for m in [0, l), mirrored so tab[m] == tab[l - m] exactly.
std::vector<double> cosine_table(int l) {
    std::vector<double> tab(l);
    for (int m = 0; m <= l / 2; ++m)
        tab[m] = std::cos(2.0 * std::numbers::pi * m / l);
    for (int m = l / 2 + 1; m < l; ++m) tab[m] = tab[l - m];
    return tab;
}

}

ModeSpectrum potential_spectrum(const LatticeSpec& spec) {
    spec.validate();
    const int l = spec.linear_size;
    const double c = spec.coupling;
    const auto tab = cosine_table(l);
    ModeSpectrum out;
    out.eigenvalues.reserve(spec.n_modes());
    if (spec.dim == 1) {
        for (int k = 0; k < l; ++k) out.eigenvalues.push_back(1.0 - 2.0 * c * tab[k]);
    } else {
        for (int k2 = 0; k2 < l; ++k2)
            for (int k1 = 0; k1 < l; ++k1)
                out.eigenvalues.push_back(1.0 - 2.0 * c * (tab[k1] + tab[k2]));
    }
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    if (out.eigenvalues.front() < kSpectrumFloor)
        throw std::domain_error(fmt::format(
            "potential spectrum: smallest eigenvalue {} below numerical floor",
            out.eigenvalues.front()));
    return out;
}

Matrix matrix_function(const LatticeSpec& spec, const std::function<double(double)>& f) {
    spec.validate();
    const int l = spec.linear_size;
    const double c = spec.coupling;
    const int n = spec.n_modes();
    const auto tab = cosine_table(l);

    auto checked = [&](double lambda) {
        const double v = f(lambda);
        if (!std::isfinite(v))
            throw std::domain_error(
                fmt::format("matrix_function: f({}) is not finite", lambda));
        return v;
    };

    Matrix out(n, n);
    if (spec.dim == 1) {
        // First row r(d) = (1/l) sum_k f(lambda_k) cos(2 pi k d / l).
        std::vector<double> fk(l);
        for (int k = 0; k < l; ++k) fk[k] = checked(1.0 - 2.0 * c * tab[k]);
        std::vector<double> row(l, 0.0);
        for (int d = 0; d < l; ++d) {
            double acc = 0.0;
            for (int k = 0; k < l; ++k) acc += fk[k] * tab[(k * d) % l];
            row[d] = acc / l;
        }
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) out(i, j) = row[(i - j + l) % l];
    } else {
        std::vector<double> fk(n);
        for (int k2 = 0; k2 < l; ++k2)
            for (int k1 = 0; k1 < l; ++k1)
                fk[k1 + l * k2] = checked(1.0 - 2.0 * c * (tab[k1] + tab[k2]));
        std::vector<double> row(n, 0.0);
        for (int dy = 0; dy < l; ++dy) {
            for (int dx = 0; dx < l; ++dx) {
                double acc = 0.0;
                for (int k2 = 0; k2 < l; ++k2)
                    for (int k1 = 0; k1 < l; ++k1)
                        acc += fk[k1 + l * k2] * tab[(k1 * dx + k2 * dy) % l];
                row[dx + l * dy] = acc / n;
            }
        }
        for (int y1 = 0; y1 < l; ++y1)
            for (int x1 = 0; x1 < l; ++x1) {
                const int i = x1 + l * y1;
                for (int y2 = 0; y2 < l; ++y2)
                    for (int x2 = 0; x2 < l; ++x2) {
                        const int j = x2 + l * y2;
                        out(i, j) = row[((x1 - x2 + l) % l) + l * ((y1 - y2 + l) % l)];
                    }
            }
    }
    return out;
}

}
