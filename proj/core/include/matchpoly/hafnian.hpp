#pragma once

#include <stdexcept>
#include <vector>

#include "matchpoly/matching.hpp"
#include "matchpoly/numeric.hpp"
#include "matchpoly/sym_matrix.hpp"

namespace matchpoly {

namespace detail {

/// Sum over perfect matchings of `vertices` of the entry products,
/// enumerated in canonical order (smallest free vertex first) so the
/// float-regime compensated accumulation order is reproducible.
template <class T>
void hafnian_rec(const SymMatrix<T>& b, std::vector<int>& vertices, const T& prefix,
                 Accumulator<T>& acc) {
    const int m = static_cast<int>(vertices.size());
    if (m == 0) {
        acc.add(prefix);
        return;
    }
    const int v = vertices[0];
    // pair v with each later vertex; the rest recurses on a compacted list
    std::vector<int> rest(vertices.begin() + 1, vertices.end());
    for (int idx = 0; idx < m - 1; ++idx) {
        const int u = rest[idx];
        std::vector<int> next;
        next.reserve(m - 2);
        for (int t = 0; t < m - 1; ++t)
            if (t != idx) next.push_back(rest[t]);
        T w = prefix * b(v, u);
        hafnian_rec(b, next, w, acc);
    }
}

template <class T>
T hafnian_on(const SymMatrix<T>& b, std::vector<int> vertices) {
    if (vertices.empty()) return T(1);  // haf of the empty matrix
    Accumulator<T> acc;
    hafnian_rec(b, vertices, T(1), acc);
    return acc.value();
}

/// Streams k-matchings restricted to `vertices`, accumulating products.
/// Each step either matches the smallest remaining vertex or skips it.
template <class T>
void k_matching_sum_rec(const SymMatrix<T>& b, const std::vector<int>& vertices, int begin,
                        int pairs_left, const T& prefix, Accumulator<T>& acc) {
    if (pairs_left == 0) {
        acc.add(prefix);
        return;
    }
    const int m = static_cast<int>(vertices.size());
    if (m - begin < 2 * pairs_left) return;  // not enough vertices left
    const int v = vertices[begin];
    std::vector<int> sub(vertices.begin() + begin + 1, vertices.end());
    for (int idx = 0; idx < static_cast<int>(sub.size()); ++idx) {
        std::vector<int> next;
        next.reserve(sub.size() - 1);
        for (int t = 0; t < static_cast<int>(sub.size()); ++t)
            if (t != idx) next.push_back(sub[t]);
        T w = prefix * b(v, sub[idx]);
        k_matching_sum_rec(b, next, 0, pairs_left - 1, w, acc);
    }
    // skip v
    k_matching_sum_rec(b, vertices, begin + 1, pairs_left, prefix, acc);
}

}  // namespace detail

/// Hafnian: sum over perfect matchings M of the products of matched
/// entries. Exact in the Rational regime; Neumaier-compensated in double.
/// Throws on odd order or when the enumeration guard is exceeded.
template <class T>
T hafnian(const SymMatrix<T>& b) {
    if (b.order() % 2 != 0) throw std::invalid_argument("hafnian: order must be even");
    check_enumeration_guard(b.order());
    std::vector<int> all(b.order());
    for (int i = 0; i < b.order(); ++i) all[i] = i;
    return detail::hafnian_on(b, std::move(all));
}

/// haf_k: the sum of hafnians of all principal submatrices of order 2k,
/// i.e. the total weight of k-matchings. haf_0 = 1 by convention.
template <class T>
T haf_k_bysubsets(const SymMatrix<T>& b, int k) {
    if (k < 0 || 2 * k > b.order())
        throw std::invalid_argument("haf_k: need 0 <= 2k <= order");
    if (k == 0) return T(1);
    check_enumeration_guard(2 * k);
    std::vector<int> all(b.order());
    for (int i = 0; i < b.order(); ++i) all[i] = i;
    Accumulator<T> acc;
    detail::k_matching_sum_rec(b, all, 0, k, T(1), acc);
    return acc.value();
}

/// Same value through the edge-removal recursion
///   haf_k(F) = (1/k) * sum_{i<j} f_ij haf_{k-1}(F[V \ {i,j}]),
/// kept as an independent cross-check path of haf_k_bysubsets.
template <class T>
T haf_k_recursive(const SymMatrix<T>& b, int k) {
    if (k < 0 || 2 * k > b.order())
        throw std::invalid_argument("haf_k: need 0 <= 2k <= order");
    if (k == 0) return T(1);
    check_enumeration_guard(2 * k);
    const int n = b.order();
    Accumulator<T> acc;
    std::vector<int> rest;
    rest.reserve(n - 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            rest.clear();
            for (int t = 0; t < n; ++t)
                if (t != i && t != j) rest.push_back(t);
            T term = b(i, j) * haf_k_recursive(b.principal_submatrix(rest), k - 1);
            acc.add(term);
        }
    }
    return acc.value() / T(k);
}

/// Entrywise partial derivatives of haf_k: by multilinearity
/// d haf_k / d b_ij = haf_{k-1}(B[V \ {i,j}]). Returned as a symmetric
/// zero-diagonal matrix over the independent upper entries.
template <class T>
SymMatrix<T> haf_gradient(const SymMatrix<T>& b, int k) {
    if (k < 1 || 2 * k > b.order())
        throw std::invalid_argument("haf_gradient: need 1 <= 2k <= order");
    const int n = b.order();
    SymMatrix<T> g = SymMatrix<T>::zero(n);
    std::vector<int> rest;
    rest.reserve(n - 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            rest.clear();
            for (int t = 0; t < n; ++t)
                if (t != i && t != j) rest.push_back(t);
            g.set(i, j, haf_k_bysubsets(b.principal_submatrix(rest), k - 1));
        }
    }
    return g;
}

/// Number of k-matchings of the weighted graph A (integer entries, exact
/// regime). Throws if any entry is not an integer.
BigInt count_k_matchings(const SymMatrixQ& a, int k);

}  // namespace matchpoly
