#pragma once

#include <cstdint>
#include <random>

#include "matchpoly/matching.hpp"
#include "matchpoly/polytope.hpp"
#include "matchpoly/sym_matrix.hpp"

namespace matchpoly {

/// Seeded RNG with self-contained draw algorithms, so that sampled streams
/// do not depend on standard-library distribution implementations.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // multiply-shift; bias is negligible for the small n used here
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(eng_()) * n) >> 64);
    }

    double exponential() {
        double u;
        do {
            u = uniform();
        } while (u <= 0.0);
        return -std::log(u);
    }

    double gaussian() {
        // Box-Muller, one value per call
        double u1;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

  private:
    std::mt19937_64 eng_;
};

/// Uniformly random perfect matching of K_{two_n} (pair the smallest free
/// vertex with a uniformly random free partner).
Matching random_perfect_matching(int two_n, Rng& rng);

/// Random polytope member: convex combination of `num_extremes` random
/// extreme points (default 2 * two_n) with symmetric-Dirichlet(1) weights.
SymMatrixD random_polytope_point(int two_n, Rng& rng, int num_extremes = 0);

/// Random polytope member with exactly one positive eigenvalue: draws a
/// random member and shrinks it toward the barycenter (staying inside the
/// polytope) until the eigenvalue gate passes. Throws if the gate never
/// passes within `max_halvings` (it passes near the barycenter, where the
/// spectrum approaches {1, -1/(2n-1), ...}).
SymMatrixD random_gated_polytope_point(int two_n, Rng& rng, double gate_tol = 1e-9,
                                       int max_halvings = 60);

/// Random unit-norm tangent direction (Gaussian entries, projected to zero
/// row sums, normalized in the packed upper-entry norm).
TangentDirection random_tangent_direction(int two_n, Rng& rng);

}  // namespace matchpoly
