#include "matchpoly/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "matchpoly/guards.hpp"
#include "matchpoly/numeric.hpp"

namespace matchpoly {

namespace {

void check_subset_guard(int order) {
    if (order > guards::max_subset_order())
        throw std::invalid_argument("odd-subset scan guard exceeded: order " +
                                    std::to_string(order) + " > " +
                                    std::to_string(guards::max_subset_order()) +
                                    " (set MATCHPOLY_MAX_ORDER to override, unsafe)");
}

// Enumerates every subset of {0..order-1} of size <= order-3 exactly once,
// carrying the internal pair-weight sum incrementally; calls visit(subset,
// sum) for odd sizes in [3, order-3].
template <class T, class Visit>
void odd_subset_scan(const SymMatrix<T>& b, Visit&& visit) {
    const int n = b.order();
    const int max_size = n - 3;
    if (max_size < 3) return;
    std::vector<int> chosen;
    chosen.reserve(max_size);

    auto rec = [&](auto&& self, int v, T sum) -> void {
        if (v == n) {
            const int s = static_cast<int>(chosen.size());
            if (s >= 3 && s % 2 == 1) visit(chosen, sum);
            return;
        }
        self(self, v + 1, sum);  // exclude v
        if (static_cast<int>(chosen.size()) < max_size) {
            T inc(0);
            for (int u : chosen) inc += b(u, v);
            chosen.push_back(v);
            self(self, v + 1, sum + inc);
            chosen.pop_back();
        }
    };
    rec(rec, 0, T(0));
}

template <class T>
MembershipReport<T> membership_impl(const SymMatrix<T>& b, const T& tol) {
    if (b.order() % 2 != 0) throw std::invalid_argument("is_member: order must be even");
    check_subset_guard(b.order());

    MembershipReport<T> report;
    const int n = b.order();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const T x = b(i, j);
            if (x < -tol) report.negative_entries.push_back({i, j, x});
        }
    }
    for (int i = 0; i < n; ++i) {
        const T r = b.row_sum(i);
        if (abs_value(T(r - T(1))) > tol) report.row_sums.push_back({i, r});
    }
    odd_subset_scan(b, [&](const std::vector<int>& subset, const T& pair_sum) {
        // Edmonds condition: sum_{i,j in S} b_ij = 2 * pair_sum <= |S| - 1
        const T full_sum = pair_sum + pair_sum;
        const T bound = T(static_cast<int>(subset.size()) - 1);
        if (full_sum > bound + tol)
            report.odd_sets.push_back({subset, T(full_sum - bound)});
    });
    report.member =
        report.odd_sets.empty() && report.row_sums.empty() && report.negative_entries.empty();
    return report;
}

}  // namespace

MembershipReport<double> is_member(const SymMatrixD& b, double tol) {
    if (tol < 0) throw std::invalid_argument("is_member: tol must be nonnegative");
    return membership_impl(b, tol);
}

MembershipReport<Rational> is_member_exact(const SymMatrixQ& b) {
    return membership_impl(b, Rational(0));
}

PolytopePoint PolytopePoint::certify(SymMatrixD b, double tol) {
    const auto report = is_member(b, tol);
    if (!report.member)
        throw std::invalid_argument("PolytopePoint: matrix is not a polytope member at tol " +
                                    std::to_string(tol));
    return PolytopePoint{std::move(b), tol};
}

PolytopePoint matching_to_matrix(const Matching& m, int two_n) {
    m.validate(two_n);
    if (2 * m.size() != two_n)
        throw std::invalid_argument("matching_to_matrix: matching is not perfect");
    SymMatrixD out = SymMatrixD::zero(two_n);
    for (const auto& [i, j] : m.pairs) out.set(i, j, 1.0);
    // extreme point by construction; membership is validated in tests
    return PolytopePoint{std::move(out), 0.0};
}

BarycenterInfo barycenter(int two_n) {
    if (two_n < 4 || two_n % 2 != 0)
        throw std::invalid_argument("barycenter: order must be even and at least 4");
    const double c = 1.0 / (two_n - 1);
    SymMatrixD mat(two_n,
                   std::vector<double>(static_cast<std::size_t>(two_n) * (two_n - 1) / 2, c));
    BarycenterInfo info{PolytopePoint{std::move(mat), 1e-9}, c, std::nullopt};
    // Every odd set of size s has internal weight s(s-1)/(2n-1): the slack
    // depends only on s, so the minimum is over sizes, not subsets.
    for (int s = 3; s <= two_n - 3; s += 2) {
        const double slack = (s - 1) - static_cast<double>(s) * (s - 1) / (two_n - 1);
        if (!info.min_odd_set_slack || slack < *info.min_odd_set_slack)
            info.min_odd_set_slack = slack;
    }
    return info;
}

TangentDirection TangentDirection::checked(SymMatrixD y, double tol) {
    for (int i = 0; i < y.order(); ++i) {
        if (std::abs(y.row_sum(i)) > tol)
            throw std::invalid_argument("TangentDirection: row sum " + std::to_string(i) +
                                        " exceeds tolerance");
    }
    return TangentDirection{std::move(y)};
}

TangentDirection project_to_tangent(const SymMatrixD& x) {
    const int n = x.order();
    if (n == 2) return TangentDirection{SymMatrixD::zero(2)};  // zero row sums force 0
    std::vector<double> r(n);
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        r[i] = x.row_sum(i);
        total += r[i];
    }
    std::vector<double> lambda(n);
    for (int i = 0; i < n; ++i)
        lambda[i] = 2.0 * r[i] / (n - 2) - 2.0 * total / ((n - 2) * (2.0 * n - 2));
    SymMatrixD out = SymMatrixD::zero(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out.set(i, j, x(i, j) - 0.5 * (lambda[i] + lambda[j]));
    return TangentDirection{std::move(out)};
}

namespace {

double upper_dot(const SymMatrixD& a, const SymMatrixD& b) {
    double s = 0.0;
    for (std::size_t t = 0; t < a.upper().size(); ++t) s += a.upper()[t] * b.upper()[t];
    return s;
}

}  // namespace

std::vector<TangentDirection> tangent_basis(int two_n) {
    if (two_n < 4 || two_n % 2 != 0)
        throw std::invalid_argument("tangent_basis: order must be even and at least 4");
    const int expected = two_n * (two_n - 3) / 2;
    std::vector<TangentDirection> basis;
    basis.reserve(expected);
    for (int i = 0; i < two_n; ++i) {
        for (int j = i + 1; j < two_n; ++j) {
            if (static_cast<int>(basis.size()) == expected) break;
            SymMatrixD e = SymMatrixD::zero(two_n);
            e.set(i, j, 1.0);
            SymMatrixD y = project_to_tangent(e).matrix;
            // modified Gram-Schmidt with one re-orthogonalization pass
            for (int pass = 0; pass < 2; ++pass) {
                for (const auto& q : basis) {
                    const double c = upper_dot(y, q.matrix);
                    auto& up = y.upper_mutable();
                    for (std::size_t t = 0; t < up.size(); ++t) up[t] -= c * q.matrix.upper()[t];
                }
            }
            const double norm = std::sqrt(upper_dot(y, y));
            if (norm < 1e-8) continue;  // linearly dependent on earlier projections
            auto& up = y.upper_mutable();
            for (double& v : up) v /= norm;
            basis.push_back(TangentDirection{std::move(y)});
            if (static_cast<int>(basis.size()) == expected && i == two_n - 1) break;
        }
    }
    if (static_cast<int>(basis.size()) != expected)
        throw std::logic_error("tangent_basis: expected dimension " + std::to_string(expected) +
                               ", built " + std::to_string(basis.size()));
    return basis;
}

LmoResult lmo(const SymMatrixD& gradient) {
    if (gradient.order() % 2 != 0) throw std::invalid_argument("lmo: order must be even");
    bool have = false;
    Matching best;
    double best_score = 0.0;
    enumerate_perfect_matchings(gradient.order(), [&](const Matching& m) {
        double score = 0.0;
        for (const auto& [i, j] : m.pairs) score += 2.0 * gradient(i, j);
        if (!have || score < best_score) {
            have = true;
            best = m;
            best_score = score;
        }
        return true;
    });
    auto point = matching_to_matrix(best, gradient.order());
    return LmoResult{std::move(best), std::move(point.matrix), best_score};
}

RegularGraphReport regular_graph_check(const SymMatrixQ& a, int r) {
    if (a.order() % 2 != 0)
        throw std::invalid_argument("regular_graph_check: order must be even");
    if (r < 1) throw std::invalid_argument("regular_graph_check: r must be positive");
    check_subset_guard(a.order());
    for (const Rational& q : a.upper()) {
        if (denominator(q) != 1 || q < 0)
            throw std::invalid_argument("regular_graph_check: entries must be nonnegative integers");
    }
    for (int i = 0; i < a.order(); ++i) {
        if (a.row_sum(i) != r)
            throw std::invalid_argument("regular_graph_check: matrix is not " + std::to_string(r) +
                                        "-regular (row " + std::to_string(i) + ")");
    }
    RegularGraphReport report;
    report.r = r;
    odd_subset_scan(a, [&](const std::vector<int>& subset, const Rational& pair_sum) {
        // edges leaving S: r|S| - 2 * (internal weight)
        const Rational boundary = Rational(r) * static_cast<int>(subset.size()) - 2 * pair_sum;
        if (boundary < r) report.failing_cuts.push_back({subset, numerator(boundary)});
    });
    report.member = report.failing_cuts.empty();
    return report;
}

SymMatrixD convex_combination(const std::vector<SymMatrixD>& points,
                              const std::vector<double>& weights) {
    if (points.empty() || points.size() != weights.size())
        throw std::invalid_argument("convex_combination: size mismatch");
    SymMatrixD out = SymMatrixD::zero(points.front().order());
    auto& up = out.upper_mutable();
    for (std::size_t p = 0; p < points.size(); ++p) {
        if (points[p].order() != out.order())
            throw std::invalid_argument("convex_combination: order mismatch");
        const auto& src = points[p].upper();
        for (std::size_t t = 0; t < up.size(); ++t) up[t] += weights[p] * src[t];
    }
    return out;
}

}  // namespace matchpoly
