#pragma once

#include <vector>

#include "matchpoly/sym_matrix.hpp"

namespace matchpoly {

/// Real spectrum of a symmetric matrix, sorted descending, with sign
/// classification at threshold tol * spectral_radius.
struct Spectrum {
    std::vector<double> eigenvalues;  // descending
    double tol = 1e-9;
    int n_positive = 0;
    int n_negative = 0;
    int n_zero = 0;

    double spectral_radius() const;
};

/// Eigenvalues of a dense symmetric matrix given in full row-major storage,
/// computed with cyclic Jacobi rotations. Stops when the off-diagonal
/// Frobenius norm drops below tol times the matrix Frobenius norm; throws
/// after `max_sweeps` sweeps without convergence. Intended for the desk
/// scale handled here (orders up to a few dozen).
std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double tol = 1e-12,
                                       int max_sweeps = 64);

Spectrum classify_spectrum(std::vector<double> eigenvalues, double tol);

/// Spectrum of a SymMatrix; tol > 0 both stops the iteration (scaled) and
/// classifies signs at tol * spectral_radius.
Spectrum sym_eigenvalues(const SymMatrixD& b, double tol = 1e-9);
Spectrum sym_eigenvalues(const SymMatrixQ& b, double tol = 1e-9);

}  // namespace matchpoly
