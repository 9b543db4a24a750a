#include "matchpoly/matching.hpp"

#include <algorithm>
#include <sstream>

#include "matchpoly/hafnian.hpp"

namespace matchpoly {

void Matching::validate(int two_n) const {
    std::vector<int> seen;
    for (const auto& [i, j] : pairs) {
        if (i < 0 || j < 0 || i >= two_n || j >= two_n)
            throw std::invalid_argument("Matching: vertex out of range");
        if (i >= j) throw std::invalid_argument("Matching: pairs must satisfy i < j");
        seen.push_back(i);
        seen.push_back(j);
    }
    std::vector<int> sorted = seen;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("Matching: repeated vertex");
    if (!std::is_sorted(pairs.begin(), pairs.end()))
        throw std::invalid_argument("Matching: pairs not in canonical order");
}

std::string Matching::str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        if (t) os << ", ";
        os << "(" << pairs[t].first << "," << pairs[t].second << ")";
    }
    os << "}";
    return os.str();
}

void check_enumeration_guard(int two_n) {
    if (two_n > guards::max_matching_order())
        throw std::invalid_argument("matching enumeration guard exceeded: order " +
                                    std::to_string(two_n) + " > " +
                                    std::to_string(guards::max_matching_order()) +
                                    " (set MATCHPOLY_MAX_ORDER to override, unsafe)");
}

namespace {

// Pair the smallest free vertex with each larger free vertex in turn; the
// emitted stream is lexicographic on the canonical pair list.
bool perfect_rec(std::vector<int>& free_verts, Matching& current,
                 const std::function<bool(const Matching&)>& visit) {
    if (free_verts.empty()) return visit(current);
    const int v = free_verts[0];
    std::vector<int> rest(free_verts.begin() + 1, free_verts.end());
    for (std::size_t idx = 0; idx < rest.size(); ++idx) {
        std::vector<int> next;
        next.reserve(rest.size() - 1);
        for (std::size_t t = 0; t < rest.size(); ++t)
            if (t != idx) next.push_back(rest[t]);
        current.pairs.emplace_back(v, rest[idx]);
        const bool keep_going = perfect_rec(next, current, visit);
        current.pairs.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

bool k_matching_rec(const std::vector<int>& verts, std::size_t begin, int pairs_left,
                    Matching& current, const std::function<bool(const Matching&)>& visit) {
    if (pairs_left == 0) return visit(current);
    if (verts.size() - begin < static_cast<std::size_t>(2 * pairs_left)) return true;
    const int v = verts[begin];
    std::vector<int> sub(verts.begin() + begin + 1, verts.end());
    for (std::size_t idx = 0; idx < sub.size(); ++idx) {
        std::vector<int> next;
        next.reserve(sub.size() - 1);
        for (std::size_t t = 0; t < sub.size(); ++t)
            if (t != idx) next.push_back(sub[t]);
        current.pairs.emplace_back(v, sub[idx]);
        const bool keep_going = k_matching_rec(next, 0, pairs_left - 1, current, visit);
        current.pairs.pop_back();
        if (!keep_going) return false;
    }
    // leave v unmatched
    return k_matching_rec(verts, begin + 1, pairs_left, current, visit);
}

}  // namespace

void enumerate_perfect_matchings(int two_n, const std::function<bool(const Matching&)>& visit) {
    if (two_n < 2 || two_n % 2 != 0)
        throw std::invalid_argument("enumerate_perfect_matchings: order must be even and positive");
    check_enumeration_guard(two_n);
    std::vector<int> verts(two_n);
    for (int i = 0; i < two_n; ++i) verts[i] = i;
    Matching current;
    perfect_rec(verts, current, visit);
}

void enumerate_k_matchings(int two_n, int k, const std::function<bool(const Matching&)>& visit) {
    if (two_n < 1) throw std::invalid_argument("enumerate_k_matchings: bad order");
    if (k < 0 || 2 * k > two_n)
        throw std::invalid_argument("enumerate_k_matchings: need 0 <= 2k <= order");
    check_enumeration_guard(two_n);
    std::vector<int> verts(two_n);
    for (int i = 0; i < two_n; ++i) verts[i] = i;
    Matching current;
    k_matching_rec(verts, 0, k, current, visit);
}

std::vector<Matching> all_perfect_matchings(int two_n) {
    std::vector<Matching> out;
    enumerate_perfect_matchings(two_n, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

std::vector<Matching> all_k_matchings(int two_n, int k) {
    std::vector<Matching> out;
    enumerate_k_matchings(two_n, k, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

BigInt count_k_matchings(const SymMatrixQ& a, int k) {
    for (const Rational& q : a.upper()) {
        if (denominator(q) != 1)
            throw std::invalid_argument("count_k_matchings: matrix entries must be integers");
    }
    const Rational total = haf_k_bysubsets(a, k);
    return numerator(total);  // denominator is 1: integer combination of integers
}

}  // namespace matchpoly
