#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matchpoly/rational.hpp"

namespace matchpoly {

/// Dense symmetric matrix with identically zero diagonal, the carrier type
/// for edge weights, adjacency matrices, polytope points and tangent
/// directions. Only the strict upper triangle is stored, packed row-major:
///
///   index(i, j) = i*(2*order - i - 3)/2 + j - 1   for 0 <= i < j < order,
///
/// i.e. (0,1), (0,2), ..., (0,order-1), (1,2), ... This layout is part of
/// the contract: the JSON "upper" array and all packed-entry views use it.
///
/// Entries may be negative (tangent directions); weight/adjacency
/// constructors produce nonnegative entries.
template <class T>
class SymMatrix {
  public:
    SymMatrix() : order_(0) {}

    /// Builds from the packed upper triangle. Throws if the entry count is
    /// not order*(order-1)/2 or (for double) an entry is NaN/infinite.
    SymMatrix(int order, std::vector<T> upper) : order_(order), upper_(std::move(upper)) {
        if (order < 2) throw std::invalid_argument("SymMatrix: order must be at least 2");
        const std::size_t expected = static_cast<std::size_t>(order) * (order - 1) / 2;
        if (upper_.size() != expected) {
            throw std::invalid_argument("SymMatrix: expected " + std::to_string(expected) +
                                        " upper entries, got " + std::to_string(upper_.size()));
        }
        check_finite();
    }

    static SymMatrix zero(int order) {
        return SymMatrix(order, std::vector<T>(static_cast<std::size_t>(order) * (order - 1) / 2, T(0)));
    }

    int order() const { return order_; }

    static std::size_t upper_index(int order, int i, int j) {
        return static_cast<std::size_t>(i) * (2 * order - i - 3) / 2 + j - 1;
    }

    /// Entry (i, j); zero on the diagonal, symmetric otherwise.
    T operator()(int i, int j) const {
        check_range(i);
        check_range(j);
        if (i == j) return T(0);
        if (i > j) std::swap(i, j);
        return upper_[upper_index(order_, i, j)];
    }

    /// Sets the (i, j) = (j, i) entry. Diagonal entries cannot be set.
    void set(int i, int j, const T& value) {
        check_range(i);
        check_range(j);
        if (i == j) throw std::invalid_argument("SymMatrix: diagonal is identically zero");
        if (i > j) std::swap(i, j);
        upper_[upper_index(order_, i, j)] = value;
    }

    const std::vector<T>& upper() const { return upper_; }
    std::vector<T>& upper_mutable() { return upper_; }

    T row_sum(int i) const {
        check_range(i);
        T s(0);
        for (int j = 0; j < order_; ++j)
            if (j != i) s += (*this)(i, j);
        return s;
    }

    /// Sum of all entries of the full matrix (twice the upper-triangle sum).
    T total_sum() const {
        T s(0);
        for (const T& x : upper_) s += x;
        return s + s;
    }

    /// Restriction to the index set `vertices` (given order preserved).
    /// Indices must be distinct and in range.
    SymMatrix principal_submatrix(std::span<const int> vertices) const {
        const int m = static_cast<int>(vertices.size());
        if (m < 1) throw std::invalid_argument("principal_submatrix: empty index set");
        for (int v : vertices) check_range(v);
        if (m == 1) {
            // 1x1 zero matrix has no upper entries; keep the smallest valid order
            // by convention callers never take hafnians of it.
            SymMatrix out;
            out.order_ = 1;
            return out;
        }
        SymMatrix out = SymMatrix::zero(m);
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) out.set(a, b, (*this)(vertices[a], vertices[b]));
        return out;
    }

    bool operator==(const SymMatrix& other) const = default;

  private:
    void check_range(int i) const {
        if (i < 0 || i >= order_) throw std::out_of_range("SymMatrix: index out of range");
    }
    void check_finite() const {
        if constexpr (std::is_same_v<T, double>) {
            for (double x : upper_)
                if (!std::isfinite(x)) throw std::invalid_argument("SymMatrix: NaN or infinite entry");
        }
    }

    int order_;
    std::vector<T> upper_;
};

using SymMatrixD = SymMatrix<double>;
using SymMatrixQ = SymMatrix<Rational>;

/// Dense rectangular matrix (row-major), the bipartite weight carrier.
template <class T>
class RectMatrix {
  public:
    RectMatrix(int rows, int cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("RectMatrix: empty shape");
        if (data_.size() != static_cast<std::size_t>(rows) * cols)
            throw std::invalid_argument("RectMatrix: wrong entry count");
    }
    static RectMatrix constant(int rows, int cols, const T& value) {
        return RectMatrix(rows, cols, std::vector<T>(static_cast<std::size_t>(rows) * cols, value));
    }
    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
    T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  private:
    int rows_, cols_;
    std::vector<T> data_;
};

using RectMatrixD = RectMatrix<double>;
using RectMatrixQ = RectMatrix<Rational>;

/// Adjacency matrix of the complete graph K_{two_n}: all off-diagonal
/// entries 1. Throws unless two_n is even and >= 2.
template <class T>
SymMatrix<T> complete_graph(int two_n) {
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("complete_graph: order must be even and positive");
    return SymMatrix<T>(two_n,
                        std::vector<T>(static_cast<std::size_t>(two_n) * (two_n - 1) / 2, T(1)));
}

/// Bipartite adjacency matrix of K_{n,n}: the n x n all-ones matrix.
template <class T>
RectMatrix<T> complete_bipartite(int n) {
    if (n < 1) throw std::invalid_argument("complete_bipartite: n must be positive");
    return RectMatrix<T>::constant(n, n, T(1));
}

/// Symmetric embedding [[0, C], [C^T, 0]] of an l x m bipartite weight
/// matrix: order l+m, rows of C indexing the first block.
template <class T>
SymMatrix<T> bipartite_embedding(const RectMatrix<T>& c) {
    const int l = c.rows(), m = c.cols();
    SymMatrix<T> out = SymMatrix<T>::zero(l + m);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < m; ++j) out.set(i, l + j, c(i, j));
    return out;
}

/// Block-diagonal direct sum; cross-block entries are zero.
template <class T>
SymMatrix<T> direct_sum(const SymMatrix<T>& a, const SymMatrix<T>& b) {
    SymMatrix<T> out = SymMatrix<T>::zero(a.order() + b.order());
    for (int i = 0; i < a.order(); ++i)
        for (int j = i + 1; j < a.order(); ++j) out.set(i, j, a(i, j));
    for (int i = 0; i < b.order(); ++i)
        for (int j = i + 1; j < b.order(); ++j) out.set(a.order() + i, a.order() + j, b(i, j));
    return out;
}

template <class T>
SymMatrix<T> scale(const SymMatrix<T>& a, const T& factor) {
    std::vector<T> up = a.upper();
    for (T& x : up) x = x * factor;
    return SymMatrix<T>(a.order(), std::move(up));
}

inline SymMatrixD to_float(const SymMatrixQ& a) {
    std::vector<double> up;
    up.reserve(a.upper().size());
    for (const Rational& q : a.upper()) up.push_back(to_double(q));
    return SymMatrixD(a.order(), std::move(up));
}

/// Exact lift of a float matrix (doubles are dyadic rationals).
inline SymMatrixQ to_exact(const SymMatrixD& a) {
    std::vector<Rational> up;
    up.reserve(a.upper().size());
    for (double x : a.upper()) up.push_back(rational_from_double(x));
    return SymMatrixQ(a.order(), std::move(up));
}

}  // namespace matchpoly
