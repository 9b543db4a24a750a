#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matchpoly/guards.hpp"

namespace matchpoly {

/// A k-matching on vertices {0..2n-1}: pairwise disjoint pairs (i, j) with
/// i < j, kept sorted lexicographically (canonical form).
struct Matching {
    std::vector<std::pair<int, int>> pairs;

    int size() const { return static_cast<int>(pairs.size()); }
    bool operator==(const Matching&) const = default;
    auto operator<=>(const Matching&) const = default;

    /// Validates canonical form over {0..two_n-1}; throws otherwise.
    void validate(int two_n) const;
    std::string str() const;
};

/// Streams every perfect matching of K_{two_n} exactly once, in canonical
/// (lexicographic) order: the smallest free vertex is paired with each
/// larger free vertex in increasing order, recursing on the rest. Visitor
/// returns false to stop early.
void enumerate_perfect_matchings(int two_n, const std::function<bool(const Matching&)>& visit);

/// Streams every k-matching of K_{two_n} exactly once, lexicographic order.
void enumerate_k_matchings(int two_n, int k, const std::function<bool(const Matching&)>& visit);

/// Materialized enumerations (guarded; convenient for tests and the LMO).
std::vector<Matching> all_perfect_matchings(int two_n);
std::vector<Matching> all_k_matchings(int two_n, int k);

/// (2n-1)!! as a double-checked count helper, see double_factorial_odd for
/// the exact value.
void check_enumeration_guard(int two_n);

}  // namespace matchpoly
