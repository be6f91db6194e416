#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "manin/errors.hpp"
#include "manin/lattice.hpp"
#include "manin/linalg.hpp"
#include "manin/rational.hpp"

namespace manin {

// Convex polytope given by its rational vertex list.
struct RationalPolytope {
    Space space = Space::Curve;
    std::vector<QVec> vertices;
};

namespace detail {

// Supporting hyperplanes of a full-dimensional point set in Q^k, each
// returned as the sorted list of point indices lying on it.
inline std::vector<std::vector<int>> polytope_facets(const std::vector<QVec>& pts, int k) {
    int m = static_cast<int>(pts.size());
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> facets;

    std::vector<int> subset(k);
    // iterate over all k-subsets of the points
    for (int i = 0; i < k; ++i) subset[i] = i;
    while (true) {
        // hyperplane through the subset: nonzero (w, c) with w . p + c = 0
        QMat sys;
        for (int idx : subset) {
            QVec row = pts[idx];
            row.push_back(Rational(1));
            sys.push_back(std::move(row));
        }
        QMat probe = sys;
        if (matrix_rank(std::move(probe)) == k) {
            // one-dimensional null space; pin a free coordinate to 1
            QVec normal;
            for (int free = 0; free <= k && normal.empty(); ++free) {
                QMat a = sys;
                QVec b(sys.size(), Rational(0));
                QVec pin(k + 1, Rational(0));
                pin[free] = Rational(1);
                a.push_back(pin);
                b.push_back(Rational(1));
                auto x = solve_linear(a, b);
                if (x) normal = *x;
            }
            if (!normal.empty()) {
                int below = 0, above = 0;
                std::vector<int> on;
                for (int i = 0; i < m; ++i) {
                    Rational v = normal[k];
                    for (int c = 0; c < k; ++c) v += normal[c] * pts[i][c];
                    if (v.is_zero())
                        on.push_back(i);
                    else if (v.sign() > 0)
                        ++above;
                    else
                        ++below;
                }
                if ((above == 0 || below == 0) && static_cast<int>(on.size()) >= k) {
                    if (seen.insert(on).second) facets.push_back(on);
                }
            }
        }
        int pos = k - 1;
        while (pos >= 0 && subset[pos] == m - k + pos) --pos;
        if (pos < 0) break;
        ++subset[pos];
        for (int i = pos + 1; i < k; ++i) subset[i] = subset[i - 1] + 1;
    }
    return facets;
}

// Triangulate a full-dimensional polytope in Q^k by coning each facet
// triangulation to the first vertex. Returns index tuples into `pts`.
inline std::vector<std::vector<int>> triangulate(const std::vector<QVec>& pts, int k) {
    int m = static_cast<int>(pts.size());
    if (k == 0) return {{0}};
    if (m == k + 1) {
        std::vector<int> all(m);
        for (int i = 0; i < m; ++i) all[i] = i;
        return {all};
    }
    std::vector<std::vector<int>> result;
    for (const auto& facet : polytope_facets(pts, k)) {
        if (std::find(facet.begin(), facet.end(), 0) != facet.end()) continue;

        // chart: express the facet's points in coordinates of its own affine span
        const QVec& origin = pts[facet[0]];
        QMat dirs; // columns = independent edge directions
        for (std::size_t i = 1; i < facet.size() && static_cast<int>(dirs.size()) < k - 1; ++i) {
            QVec d(k);
            for (int c = 0; c < k; ++c) d[c] = pts[facet[i]][c] - origin[c];
            dirs.push_back(std::move(d));
            if (matrix_rank(dirs) != static_cast<int>(dirs.size())) dirs.pop_back();
        }
        if (static_cast<int>(dirs.size()) != k - 1)
            throw error("degenerate facet in polytope triangulation");
        QMat dirs_t(k, QVec(k - 1));
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < k - 1; ++c) dirs_t[r][c] = dirs[c][r];

        std::vector<QVec> sub;
        for (int idx : facet) {
            QVec rhs(k);
            for (int c = 0; c < k; ++c) rhs[c] = pts[idx][c] - origin[c];
            auto x = solve_linear(dirs_t, rhs);
            if (!x) throw error("facet point outside its own affine span");
            sub.push_back(*x);
        }
        for (const auto& tri : triangulate(sub, k - 1)) {
            std::vector<int> lifted;
            lifted.push_back(0);
            for (int local : tri) lifted.push_back(facet[local]);
            result.push_back(std::move(lifted));
        }
    }
    return result;
}

inline Rational factorial(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

} // namespace detail

// Exact Euclidean volume in the lattice-normalized measure (the unit cube of
// the integer lattice has volume 1), via fan triangulation from the first
// vertex and determinant sums. Vertex sets that do not span the full ambient
// dimension have volume 0.
inline Rational polytope_volume(const RationalPolytope& q) {
    if (q.vertices.empty()) return Rational(0);
    int n = static_cast<int>(q.vertices[0].size());
    for (const auto& v : q.vertices)
        if (static_cast<int>(v.size()) != n) throw input_error("polytope vertices of mixed rank");

    // drop exact duplicates, keeping first occurrences
    std::vector<QVec> pts;
    for (const auto& v : q.vertices)
        if (std::find(pts.begin(), pts.end(), v) == pts.end()) pts.push_back(v);
    if (static_cast<int>(pts.size()) < n + 1) return Rational(0);

    QMat edges;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        QVec e(n);
        for (int c = 0; c < n; ++c) e[c] = pts[i][c] - pts[0][c];
        edges.push_back(std::move(e));
    }
    if (matrix_rank(edges) < n) return Rational(0);

    Rational total(0);
    for (const auto& simplex : detail::triangulate(pts, n)) {
        QMat m;
        for (std::size_t i = 1; i < simplex.size(); ++i) {
            QVec e(n);
            for (int c = 0; c < n; ++c) e[c] = pts[simplex[i]][c] - pts[simplex[0]][c];
            m.push_back(std::move(e));
        }
        total += determinant(std::move(m)).abs();
    }
    return total / detail::factorial(n);
}

} // namespace manin
