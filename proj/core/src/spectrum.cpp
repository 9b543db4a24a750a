#include "matchpoly/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace matchpoly {

double Spectrum::spectral_radius() const {
    if (eigenvalues.empty()) return 0.0;
    return std::max(std::abs(eigenvalues.front()), std::abs(eigenvalues.back()));
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, int n, double tol, int max_sweeps) {
    if (n < 1 || a.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("jacobi_eigenvalues: bad dimensions");
    if (tol <= 0) throw std::invalid_argument("jacobi_eigenvalues: tol must be positive");
    auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };

    double frob2 = 0.0;
    for (double x : a) frob2 += x * x;
    const double stop = tol * std::sqrt(frob2);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off2 = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off2 += 2.0 * at(i, j) * at(i, j);
        if (std::sqrt(off2) <= stop || frob2 == 0.0) {
            std::vector<double> ev(n);
            for (int i = 0; i < n; ++i) ev[i] = at(i, i);
            std::sort(ev.begin(), ev.end(), std::greater<double>());
            return ev;
        }
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (int i = 0; i < n; ++i) {
                    const double aip = at(i, p), aiq = at(i, q);
                    at(i, p) = c * aip - s * aiq;
                    at(i, q) = s * aip + c * aiq;
                }
                for (int i = 0; i < n; ++i) {
                    const double api = at(p, i), aqi = at(q, i);
                    at(p, i) = c * api - s * aqi;
                    at(q, i) = s * api + c * aqi;
                }
            }
        }
    }
    throw std::runtime_error("jacobi_eigenvalues: no convergence within sweep cap");
}

Spectrum classify_spectrum(std::vector<double> eigenvalues, double tol) {
    std::sort(eigenvalues.begin(), eigenvalues.end(), std::greater<double>());
    Spectrum s;
    s.eigenvalues = std::move(eigenvalues);
    s.tol = tol;
    const double threshold = tol * s.spectral_radius();
    for (double ev : s.eigenvalues) {
        if (ev > threshold)
            ++s.n_positive;
        else if (ev < -threshold)
            ++s.n_negative;
        else
            ++s.n_zero;
    }
    return s;
}

namespace {

std::vector<double> full_storage(const SymMatrixD& b) {
    const int n = b.order();
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = b(i, j);
    return a;
}

}  // namespace

Spectrum sym_eigenvalues(const SymMatrixD& b, double tol) {
    if (tol <= 0) throw std::invalid_argument("sym_eigenvalues: tol must be positive");
    // iterate well below the classification threshold
    auto ev = jacobi_eigenvalues(full_storage(b), b.order(), std::min(tol, 1e-12));
    return classify_spectrum(std::move(ev), tol);
}

Spectrum sym_eigenvalues(const SymMatrixQ& b, double tol) { return sym_eigenvalues(to_float(b), tol); }

}  // namespace matchpoly
