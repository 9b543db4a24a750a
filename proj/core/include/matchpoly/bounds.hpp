#pragma once

#include <optional>
#include <vector>

#include "matchpoly/rational.hpp"
#include "matchpoly/sym_matrix.hpp"

namespace matchpoly {

/// haf_k of the barycenter A(K_{2n})/(2n-1), in closed form:
///   (2n-1)^{-k} C(2n, 2k) (1/k!) prod_{j<k} C(2k-2j, 2).
/// Stated for 2 <= k <= n; k = 1 is accepted as a documented extension
/// (the value is the entry sum, n).
Rational haf_k_barycenter_formula(int n, int k);

/// perm_k of the bipartite barycenter A(K_{n,n})/n: n^{-k} C(n,k)^2 k!.
Rational perm_k_formula(int n, int k);

/// Stirling bracket sqrt(2 pi m) m^m e^{-m} < m! < lower * e^{1/(12m)}.
struct StirlingBounds {
    double lower;
    double upper;
};
StirlingBounds stirling_bounds(int m);

/// The strict chain
///   e^{-n} sqrt(2) < (2n)! / ((2n-1)^n 2^n n!) < n!/n^n
/// evaluated exactly in the middle/right and verified numerically.
struct InequalityChain {
    double lower;
    Rational middle_exact;
    Rational right_exact;
    double middle;
    double right;
    bool holds;
};
InequalityChain inequality_chain(int n);

/// Large-n approximations e^{-n} sqrt(2e) and e^{-n} sqrt(2 pi n) with the
/// exact/approx ratios (both decrease monotonically to 1).
struct Asymptotics {
    double approx_haf;
    double approx_perm;
    double ratio_haf;
    double ratio_perm;
};
Asymptotics asymptotics(int n);

/// Lower bound on haf_k over polytope members with exactly one positive
/// eigenvalue:
///   k = n:  ((n-1)/n)^{(n-1)n}
///   k < n:  (2n)^{2n-2k} (2n-k)! (2n)^k / ((2n-2k)! (2n-k)^{2n-k} 2^k k!)
///             * ((2n-k-1)/(2n-k))^{(2n-k-1)k}
/// evaluated in log space to avoid overflow at larger n.
double hyperbolic_bound(int n, int k);

/// Gate for the hyperbolic bound: exactly one eigenvalue above
/// tol * spectral_radius.
bool one_positive_eigenvalue(const SymMatrixD& b, double tol = 1e-9);

/// Upper bound on the limit of log(mu_{n,n})/n implied by the known
/// 3-regular family with few perfect matchings:
/// log((1+sqrt(5))/2)/6 - log 3, about -1.01841.
double mu_upper_bound_cps();

/// One row of the closed-form value/bound table for a given (n, k).
struct BoundsRow {
    int n = 0;
    int k = 0;
    bool extension = false;  // k = 1 row (outside the stated k >= 2 range)
    Rational haf_exact;
    double haf_float = 0.0;
    Rational perm_exact;
    double perm_float = 0.0;
    std::optional<double> hyp_lb;  // k >= 2 only
    double stirling_lo = 0.0;      // brackets n!
    double stirling_hi = 0.0;
    double approx_haf = 0.0;
    double approx_perm = 0.0;
};
std::vector<BoundsRow> bounds_table(int n, int k_min, int k_max);

}  // namespace matchpoly
