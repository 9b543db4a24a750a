#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matchpoly/polytope.hpp"
#include "matchpoly/rational.hpp"
#include "matchpoly/sym_matrix.hpp"

namespace matchpoly {

struct FrankWolfeConfig {
    double gap_tol = 1e-9;
    int max_iters = 50000;
    int random_starts = 8;
    std::optional<std::uint64_t> seed;  // mandatory; minimize_haf_k throws if unset
    int line_search_grid = 33;
    int check_every = 1000;    // gradient/finite-difference tripwire cadence; 0 disables
    std::string regime = "float";  // "float", or "exact" to re-evaluate the best value exactly
};

struct TrajectoryPoint {
    long long iteration;
    double value;
    double gap;
};

/// Result of minimizing haf_k over the matching polytope. best_value is an
/// UPPER estimate of the true minimum: Frank-Wolfe certifies stationarity
/// (small duality gap), not global optimality.
struct OptimizeResult {
    PolytopePoint best_point;
    double best_value = 0.0;
    std::optional<Rational> best_value_exact;  // regime == "exact" only
    std::vector<TrajectoryPoint> trajectory;   // best restart, per iterate
    int restarts = 0;
    int best_restart = 0;
    bool converged = false;  // best restart reached gap <= gap_tol
    long long total_iterations = 0;
};

/// Frank-Wolfe minimization of haf_k over the matching polytope of K_{2n}.
/// At iterate X: G = haf_gradient(X, k), S = lmo(G),
/// gap = <G, X - S> = sum_ij g_ij (x_ij - s_ij); step by exact line search
/// over the segment [X, S] (the restriction is a degree-<=k polynomial).
/// Starts: the barycenter, `random_starts` seeded random members, then any
/// `warm_starts`. Restarts are independent; the best final value wins.
OptimizeResult minimize_haf_k(int n, int k, const FrankWolfeConfig& cfg,
                              const std::vector<SymMatrixD>& warm_starts = {});

struct MuRow {
    int n = 0;
    int k = 0;
    double mu_estimate = 0.0;        // upper estimate of the minimum
    double barycenter_value = 0.0;   // haf_n at the barycenter (closed form)
    double conjecture_gap = 0.0;     // mu_estimate - barycenter_value
    double log_mu_over_n = 0.0;
    bool converged = false;
};

/// Upper estimates of min haf_n over the polytope for n = 2..max_n, with
/// the barycenter values and the -1.01841... upper bound on the limit of
/// log(mu)/n for comparison.
struct MuTable {
    std::vector<MuRow> rows;
    double cps_upper_bound = 0.0;
};
MuTable mu_table(int max_n, const FrankWolfeConfig& cfg);

/// Hessian of haf_k at the barycenter restricted to the tangent space, in
/// tangent_basis coordinates:
///   H(Y, Z) = c^{k-2} m_{k-2} sum over disjoint edge pairs {e,f} of
///             (y_e z_f + y_f z_e),
/// with c = 1/(2n-1) and m_j the number of j-matchings of K_{2n-4} (the
/// second-order coefficient of the product expansion of haf_k at C).
struct HessianResult {
    int dim = 0;
    std::vector<std::vector<double>> matrix;  // dim x dim, symmetric
    std::vector<double> eigenvalues;          // descending
    double min_eigenvalue = 0.0;
};
HessianResult hessian_on_tangent(int n, int k);

/// |sum over i<j<p<q of the three pair products - (1/2) sum y_ij^2| for a
/// tangent direction (zero row sums make the two sides equal).
double quartic_identity_residual(const TangentDirection& y);

/// Residual of the unconstrained polarization identity
///   2 sum_{i<j<p<q} (x_ij x_pq + x_ip x_jq + x_iq x_jp)
///     = (sum x_ij)^2 - sum_i (row_i)^2 + sum x_ij^2
/// on an arbitrary symmetric zero-diagonal matrix.
double polarization_identity_residual(const SymMatrixD& x);

/// |haf_2(C + Y) - haf_2(C) - (1/2) sum y_ij^2| — an exact polynomial
/// identity on the tangent space, valid for any magnitude of Y.
double haf2_expansion_residual(int n, const TangentDirection& y);

/// Product law and warm-start consistency across a direct sum of the best
/// points found at sizes n and m.
struct SubadditivityReport {
    bool product_law_exact = false;   // haf_{n+m}(B ⊕ B') == haf_n(B) haf_m(B') exactly
    bool direct_sum_member = false;   // B ⊕ B' passes membership at 1e-8
    bool warm_start_consistent = false;
    double haf_product = 0.0;
    double mu_n = 0.0;
    double mu_m = 0.0;
    double mu_sum_warm = 0.0;  // estimate at size n+m warm-started from the direct sum
};
SubadditivityReport subadditivity_check(int n, int m, const FrankWolfeConfig& cfg);

}  // namespace matchpoly
