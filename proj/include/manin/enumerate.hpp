#pragma once

#include <algorithm>
#include <vector>

#include "manin/cone.hpp"
#include "manin/errors.hpp"
#include "manin/rational.hpp"

namespace manin {

namespace detail {

inline void check_grading(const RationalPolyhedralCone& k, const LatticeVector& degree,
                          std::vector<Int>& ray_degrees) {
    if (degree.space != opposite(k.space()))
        throw input_error("degree functional must live in the paired space");
    ray_degrees.clear();
    for (const auto& r : k.rays()) {
        Int d = pairing_value(degree, r, k.pairing());
        if (d <= 0)
            throw grading_error("degree functional is not strictly positive on ray " + r.str());
        ray_degrees.push_back(d);
    }
}

} // namespace detail

// All nonzero lattice points of K with 0 < degree <= d_max, each exactly
// once, sorted by (degree, lexicographic coordinates). The search region is
// the bounding box of the polytope conv(0, d_max * ray / deg(ray)).
inline std::vector<LatticeVector> enumerate_lattice_points(const RationalPolyhedralCone& k,
                                                           const LatticeVector& degree, Int d_max) {
    std::vector<Int> ray_degrees;
    detail::check_grading(k, degree, ray_degrees);
    if (d_max < 1) return {};

    int n = k.rank();
    std::vector<Int> lo(n, 0), hi(n, 0);
    for (std::size_t i = 0; i < k.rays().size(); ++i) {
        for (int c = 0; c < n; ++c) {
            Rational v = Rational(checked_mul(d_max, k.rays()[i].coords[c]), ray_degrees[i]);
            lo[c] = std::min(lo[c], v.floor().to_int64());
            hi[c] = std::max(hi[c], v.ceil().to_int64());
        }
    }

    std::vector<LatticeVector> out;
    LatticeVector candidate(k.space(), std::vector<Int>(n, 0));
    std::vector<Int>& x = candidate.coords;
    for (int c = 0; c < n; ++c) x[c] = lo[c];
    while (true) {
        Int d = pairing_value(degree, candidate, k.pairing());
        if (d >= 1 && d <= d_max && k.contains(candidate)) out.push_back(candidate);
        int c = n - 1;
        while (c >= 0 && x[c] == hi[c]) {
            x[c] = lo[c];
            --c;
        }
        if (c < 0) break;
        ++x[c];
    }

    std::stable_sort(out.begin(), out.end(), [&](const LatticeVector& a, const LatticeVector& b) {
        Int da = pairing_value(degree, a, k.pairing());
        Int db = pairing_value(degree, b, k.pairing());
        if (da != db) return da < db;
        return a.coords < b.coords;
    });
    return out;
}

namespace detail {

// Can `target` be written as a nonnegative integer combination of `basis`?
// Depth-first over the basis with the degree as the budget.
inline bool decomposes_over(const LatticeVector& target, Int target_degree,
                            const std::vector<LatticeVector>& basis,
                            const std::vector<Int>& basis_degrees, std::size_t from) {
    if (target_degree == 0) return target.is_zero();
    for (std::size_t i = from; i < basis.size(); ++i) {
        if (basis_degrees[i] > target_degree) continue;
        LatticeVector rest = target;
        for (int c = 0; c < target.rank(); ++c)
            rest.coords[c] = checked_sub(rest.coords[c], basis[i].coords[c]);
        if (decomposes_over(rest, target_degree - basis_degrees[i], basis, basis_degrees, i))
            return true;
    }
    return false;
}

} // namespace detail

// Minimal integral generating set of K's lattice points. Candidates are
// enumerated up to the sum of the ray degrees (every Hilbert basis element of
// a pointed cone sits inside the closed fundamental domain of one simplicial
// subcone spanned by rays, so its degree is at most that sum); decomposable
// points are filtered out. The result is then re-verified by decomposing
// every lattice point of degree <= check_bound, turning a wrong bound into a
// loud incompleteness error instead of a silently short basis.
inline std::vector<LatticeVector> hilbert_basis(const RationalPolyhedralCone& k,
                                                const LatticeVector& degree, Int check_bound) {
    std::vector<Int> ray_degrees;
    detail::check_grading(k, degree, ray_degrees);
    Int bound = 0;
    for (Int d : ray_degrees) bound = checked_add(bound, d);

    std::vector<LatticeVector> candidates = enumerate_lattice_points(k, degree, bound);
    std::vector<LatticeVector> basis;
    for (const auto& p : candidates) {
        Int dp = pairing_value(degree, p, k.pairing());
        bool reducible = false;
        for (const auto& u : candidates) {
            Int du = pairing_value(degree, u, k.pairing());
            if (2 * du > dp) break; // candidates are degree-sorted
            LatticeVector rest = p - u;
            if (!rest.is_zero() && k.contains(rest)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) basis.push_back(p);
    }

    std::vector<Int> basis_degrees;
    for (const auto& b : basis) basis_degrees.push_back(pairing_value(degree, b, k.pairing()));

    std::vector<LatticeVector> to_check =
        check_bound <= bound ? candidates : enumerate_lattice_points(k, degree, check_bound);
    for (const auto& p : to_check) {
        Int dp = pairing_value(degree, p, k.pairing());
        if (dp > check_bound) break;
        if (!detail::decomposes_over(p, dp, basis, basis_degrees, 0))
            throw incompleteness_error("lattice point " + p.str() +
                                       " does not decompose over the computed Hilbert basis");
    }
    return basis;
}

} // namespace manin
