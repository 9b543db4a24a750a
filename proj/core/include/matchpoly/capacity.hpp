#pragma once

#include <vector>

#include "matchpoly/sym_matrix.hpp"

namespace matchpoly {

struct CapacityConfig {
    double grad_tol = 1e-10;  // stop when ||grad f|| drops below this
    int max_iters = 10000;
    double armijo_c = 1e-4;
};

struct CapacityEstimate {
    double value = 0.0;
    std::vector<double> minimizer;  // positive, geometric mean normalized to 1
    int iterations = 0;
};

/// Numeric estimate of Cap((x^T B x)^k) = inf_{x>0} (x^T B x)^k / (prod x_i)^{k/n},
/// where the order of B is 2n. Parametrizing x = e^u makes the objective
///   f(u) = k log((e^u)^T B e^u) - (k/n) sum(u)
/// smooth, convex and scale-invariant; it is minimized by gradient descent
/// with Armijo backtracking from u = 0. For a doubly stochastic zero-diagonal
/// member of the matching polytope the infimum is (2n)^k, attained at the
/// all-ones vector. Throws on non-convergence at the iteration cap.
CapacityEstimate capacity_estimate(const SymMatrixD& b, int k, const CapacityConfig& cfg = {});

}  // namespace matchpoly
