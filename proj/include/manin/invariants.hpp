#pragma once

#include <optional>
#include <vector>

#include "manin/errors.hpp"
#include "manin/linalg.hpp"
#include "manin/model.hpp"
#include "manin/rational.hpp"

namespace manin {

// Result of the Fujita-invariant computation. Finite values ship a
// nonnegative decomposition of a L + K_X over the pseudo-effective rays;
// infinite values ship a separating functional: a curve class that is
// nonnegative on the whole effective cone, kills L, and is negative on K_X.
struct AInvariantResult {
    bool finite = false;
    Rational value;                                       // meaningful when finite
    std::vector<std::pair<int, Rational>> certificate;    // (pseff ray index, coefficient)
    std::optional<LatticeVector> witness;                 // infinite case

    // a L + K as an exact rational divisor vector (finite case)
    QVec boundary_divisor;
};

namespace detail {

inline QVec rational_divisor(const LatticeVector& k, const LatticeVector& l, const Rational& t) {
    QVec v(k.coords.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = rational_from_int(k.coords[i]) + t * rational_from_int(l.coords[i]);
    return v;
}

// Nonnegative decomposition of `target` over the cone's rays: Caratheodory
// search over linearly independent ray subsets of size <= rank.
inline std::optional<std::vector<std::pair<int, Rational>>> cone_decomposition(
    const RationalPolyhedralCone& cone, const QVec& target) {
    int n = cone.rank();
    const auto& rays = cone.rays();
    bool all_zero = true;
    for (const auto& x : target) all_zero &= x.is_zero();
    if (all_zero) return std::vector<std::pair<int, Rational>>{};

    int m = static_cast<int>(rays.size());
    std::vector<std::vector<int>> subsets;
    std::vector<int> current;
    std::function<void(int, int)> gen = [&](int start, int size) {
        if (size > 0) subsets.push_back(current);
        if (size == n) return;
        for (int i = start; i < m; ++i) {
            current.push_back(i);
            gen(i + 1, size + 1);
            current.pop_back();
        }
    };
    gen(0, 0);

    for (const auto& subset : subsets) {
        QMat cols(n, QVec(subset.size()));
        for (std::size_t c = 0; c < subset.size(); ++c)
            for (int r = 0; r < n; ++r)
                cols[r][c] = rational_from_int(rays[subset[c]].coords[r]);
        auto x = solve_linear(cols, target);
        if (!x) continue;
        bool nonneg = true;
        for (const auto& coeff : *x) nonneg &= coeff.sign() >= 0;
        if (!nonneg) continue;
        // confirm the reconstruction exactly
        QVec rebuilt(n, Rational(0));
        for (std::size_t c = 0; c < subset.size(); ++c)
            for (int r = 0; r < n; ++r)
                rebuilt[r] += (*x)[c] * rational_from_int(rays[subset[c]].coords[r]);
        if (!(rebuilt == target)) continue;
        std::vector<std::pair<int, Rational>> result;
        for (std::size_t c = 0; c < subset.size(); ++c)
            if (!(*x)[c].is_zero()) result.emplace_back(subset[c], (*x)[c]);
        return result;
    }
    return std::nullopt;
}

} // namespace detail

// Fujita invariant a(X, L) = min { t : t L + K_X pseudo-effective } for a
// nef divisor class L. Feasibility of t L + K is linear in t against each
// facet of the effective cone, so the minimum is the largest of the per-facet
// ratios; a facet that kills L certifies infinity.
inline AInvariantResult a_invariant(const FanoThreefoldModel& m, const LatticeVector& l) {
    if (l.space != Space::Divisor || l.rank() != m.rank)
        throw input_error("a_invariant expects a divisor class of the model's rank");
    for (const auto& ray : m.nef_curve_cone.rays())
        if (pair(l, ray, m.pairing) < 0)
            throw input_error("a_invariant needs a nef divisor class; " + l.str() +
                              " is negative on nef ray " + ray.str());

    LatticeVector canonical = -1 * m.anticanonical;
    AInvariantResult result;

    // facet normals of the effective cone are curve classes
    const auto& facets = m.pseff_divisor_cone.facets();
    std::optional<Rational> best;
    for (const auto& f : facets) {
        Int lf = pair(l, f, m.pairing);
        Int kf = pair(canonical, f, m.pairing);
        if (lf == 0) {
            if (kf < 0) {
                // t*0 + kf < 0 for every t: L is nef but not big
                result.finite = false;
                result.witness = f;
                return result;
            }
            continue;
        }
        Rational t = Rational(-kf, lf);
        if (!best || t > *best) best = t;
    }
    if (!best) throw model_error("effective cone has no facet data");

    result.finite = true;
    result.value = *best;
    result.boundary_divisor = detail::rational_divisor(canonical, l, *best);
    auto cert = detail::cone_decomposition(m.pseff_divisor_cone, result.boundary_divisor);
    if (!cert)
        throw model_error("boundary divisor admits no cone decomposition; inconsistent model");
    result.certificate = *cert;
    return result;
}

// b(X, L): dimension of the span of the face of the nef curve cone killed by
// K_X + a(X, L) L. Faces of a polyhedral cone are spanned by the rays they
// contain, so this is a rank computation over the incident rays.
inline Int b_invariant(const FanoThreefoldModel& m, const LatticeVector& l) {
    AInvariantResult a = a_invariant(m, l);
    if (!a.finite)
        throw undefined_invariant_error("b-invariant undefined: a(X, L) is infinite for " +
                                        l.str());
    std::vector<std::vector<Int>> face_rays;
    for (const auto& ray : m.nef_curve_cone.rays()) {
        Rational v(0);
        for (int i = 0; i < m.rank; ++i) {
            // (K + aL) . ray through the pairing, exactly
            Rational coeff = a.boundary_divisor[i];
            if (coeff.is_zero()) continue;
            LatticeVector basis_divisor(Space::Divisor, std::vector<Int>(m.rank, 0));
            basis_divisor.coords[i] = 1;
            v += coeff * rational_from_int(pair(basis_divisor, ray, m.pairing));
        }
        if (v.is_zero()) face_rays.push_back(ray.coords);
    }
    return integer_rank(face_rays);
}

} // namespace manin
