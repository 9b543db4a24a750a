#pragma once

#include <optional>
#include <vector>

#include "matchpoly/matching.hpp"
#include "matchpoly/rational.hpp"
#include "matchpoly/sym_matrix.hpp"

namespace matchpoly {

/// An odd vertex set S, 3 <= |S| <= order-3, whose internal weight exceeds
/// |S| - 1 (an Edmonds odd-set inequality violation).
template <class T>
struct OddSetViolation {
    std::vector<int> subset;
    T excess;  // sum_{i,j in S} b_ij - (|S| - 1), positive
};

template <class T>
struct RowSumViolation {
    int row;
    T value;
};

template <class T>
struct NegativeEntryViolation {
    int i, j;
    T value;
};

/// Outcome of the matching-polytope membership test.
template <class T>
struct MembershipReport {
    bool member = false;
    std::vector<OddSetViolation<T>> odd_sets;
    std::vector<RowSumViolation<T>> row_sums;
    std::vector<NegativeEntryViolation<T>> negative_entries;
};

/// Membership in the perfect-matching polytope of the complete graph:
/// symmetric, zero diagonal (structural), entries >= -tol, row sums
/// 1 +/- tol, and sum_{i,j in S} b_ij <= |S| - 1 + tol for every odd S
/// with 3 <= |S| <= order-3. Exhaustive subset scan; throws above the
/// subset guard or on odd order.
MembershipReport<double> is_member(const SymMatrixD& b, double tol);

/// Exact-regime membership: strict comparisons, no tolerance.
MembershipReport<Rational> is_member_exact(const SymMatrixQ& b);

/// A certified member of the matching polytope.
struct PolytopePoint {
    SymMatrixD matrix;
    double feasibility_tol = 1e-9;

    /// Runs is_member and throws std::invalid_argument on failure.
    static PolytopePoint certify(SymMatrixD b, double tol = 1e-9);
};

/// 0/1 symmetric permutation matrix with zero diagonal of a perfect
/// matching — an extreme point of the polytope.
PolytopePoint matching_to_matrix(const Matching& m, int two_n);

/// The barycenter C = A(K_{2n})/(2n-1) together with its interiority
/// witness. Odd-set slacks of C depend only on |S| (every odd set of size s
/// has internal weight s(s-1)/(2n-1)), so the minimum slack is scanned over
/// sizes; for two_n = 4 the odd-set range is empty.
struct BarycenterInfo {
    PolytopePoint point;
    double min_entry = 0.0;                      // smallest entry margin
    std::optional<double> min_odd_set_slack;     // empty when no odd sets in range
};
BarycenterInfo barycenter(int two_n);

/// A symmetric zero-diagonal matrix with zero row sums — a tangent
/// direction of the polytope at an interior point.
struct TangentDirection {
    SymMatrixD matrix;

    /// Validates |row sums| <= tol; throws otherwise.
    static TangentDirection checked(SymMatrixD y, double tol = 1e-10);
};

/// Orthogonal (Frobenius) projection onto the zero-row-sum subspace within
/// the symmetric zero-diagonal matrices. Closed form: subtract
/// (lambda_i + lambda_j)/2 from entry (i,j), where
///   lambda = 2/(N-2) * (r - sum(r)/(2N-2) * 1),   r = row sums.
TangentDirection project_to_tangent(const SymMatrixD& x);

/// Orthonormal basis of the tangent space, size N(N-3)/2 for order N,
/// built by projecting elementary symmetric matrices and orthonormalizing.
/// Inner product is the packed upper-entry dot product.
std::vector<TangentDirection> tangent_basis(int two_n);

/// Linear minimization oracle over the polytope: the extreme point P
/// minimizing <G, P> = sum_{(i,j) in M} 2 g_ij, by exhaustive scan over
/// perfect matchings in canonical order (first strict minimum wins, so
/// ties break to the lexicographically smallest matching).
struct LmoResult {
    Matching matching;
    SymMatrixD point;
    double score;
};
LmoResult lmo(const SymMatrixD& gradient);

/// For an r-regular integer-weighted graph A on an even vertex set:
/// whether A/r lies in the matching polytope, i.e. every odd vertex cut S
/// in range has at least r edges leaving it. Reports failing cuts with
/// their edge deficit. Throws if A is not r-regular.
struct OddCutFailure {
    std::vector<int> subset;
    BigInt boundary_edges;  // edges leaving the set, < r
};
struct RegularGraphReport {
    bool member = false;
    int r = 0;
    std::vector<OddCutFailure> failing_cuts;
};
RegularGraphReport regular_graph_check(const SymMatrixQ& a, int r);

/// Convex combination sum(w_i * P_i); weights must sum to 1 (unchecked).
SymMatrixD convex_combination(const std::vector<SymMatrixD>& points,
                              const std::vector<double>& weights);

}  // namespace matchpoly
