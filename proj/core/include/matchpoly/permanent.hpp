#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "matchpoly/numeric.hpp"
#include "matchpoly/sym_matrix.hpp"

namespace matchpoly {

namespace detail {

inline void check_permanent_guard(long double work) {
    // brute force over permutations; keep worst case around a second
    if (work > 5e7L) throw std::invalid_argument("permanent: brute-force guard exceeded");
}

template <class T>
T perm_square(const RectMatrix<T>& c, const std::vector<int>& rows, const std::vector<int>& cols) {
    const int k = static_cast<int>(rows.size());
    std::vector<int> perm(cols);
    std::sort(perm.begin(), perm.end());
    Accumulator<T> acc;
    do {
        T p(1);
        for (int i = 0; i < k; ++i) p = p * c(rows[i], perm[i]);
        acc.add(p);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc.value();
}

}  // namespace detail

/// Permanent of a square matrix by brute force over permutations.
template <class T>
T permanent(const RectMatrix<T>& c) {
    if (c.rows() != c.cols()) throw std::invalid_argument("permanent: matrix must be square");
    long double work = 1;
    for (int i = 2; i <= c.rows(); ++i) work *= i;
    detail::check_permanent_guard(work * c.rows());
    std::vector<int> idx(c.rows());
    for (int i = 0; i < c.rows(); ++i) idx[i] = i;
    return detail::perm_square(c, idx, idx);
}

/// perm_k: the sum of permanents of all k x k submatrices, brute force over
/// row subsets, column subsets and permutations.
template <class T>
T perm_k(const RectMatrix<T>& c, int k) {
    if (k < 0 || k > std::min(c.rows(), c.cols()))
        throw std::invalid_argument("perm_k: need 0 <= k <= min(rows, cols)");
    if (k == 0) return T(1);
    long double work = 1;
    for (int i = 2; i <= k; ++i) work *= i;
    long double choose = 1;
    for (int i = 0; i < k; ++i)
        choose *= static_cast<long double>(c.rows() - i) * (c.cols() - i) / ((i + 1) * (i + 1));
    detail::check_permanent_guard(work * choose * k);

    Accumulator<T> acc;
    std::vector<int> rows(k), cols(k);
    // lexicographic subset walk for rows, then columns
    for (int i = 0; i < k; ++i) rows[i] = i;
    while (true) {
        for (int i = 0; i < k; ++i) cols[i] = i;
        while (true) {
            acc.add(detail::perm_square(c, rows, cols));
            int p = k - 1;
            while (p >= 0 && cols[p] == c.cols() - k + p) --p;
            if (p < 0) break;
            ++cols[p];
            for (int q = p + 1; q < k; ++q) cols[q] = cols[q - 1] + 1;
        }
        int p = k - 1;
        while (p >= 0 && rows[p] == c.rows() - k + p) --p;
        if (p < 0) break;
        ++rows[p];
        for (int q = p + 1; q < k; ++q) rows[q] = rows[q - 1] + 1;
    }
    return acc.value();
}

}  // namespace matchpoly
