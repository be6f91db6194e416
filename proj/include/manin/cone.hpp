#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "manin/errors.hpp"
#include "manin/lattice.hpp"
#include "manin/linalg.hpp"

namespace manin {

namespace detail {

// A vector v defines the functional pairing_value(v, .) on the opposite
// space; this returns its plain coordinate row.
inline std::vector<Int> inequality_row(Space v_space, const std::vector<Int>& v, const Pairing& p) {
    std::vector<Int> row(p.rank, 0);
    for (int j = 0; j < p.rank; ++j) {
        Int s = 0;
        for (int k = 0; k < p.rank; ++k) {
            Int m = (v_space == Space::Divisor) ? p.matrix[k][j] : p.matrix[j][k];
            s = checked_add(s, checked_mul(v[k], m));
        }
        row[j] = s;
    }
    return row;
}

// Extreme rays of { x : A x >= 0 } by the double description method.
// Requires rank(A) = n, which makes the solution cone pointed.
inline std::vector<std::vector<Int>> extreme_rays(const std::vector<std::vector<Int>>& a, int n) {
    // greedy choice of n linearly independent starting rows
    std::vector<int> basis;
    {
        QMat picked;
        for (std::size_t i = 0; i < a.size() && static_cast<int>(basis.size()) < n; ++i) {
            picked.push_back(to_qvec(a[i]));
            if (matrix_rank(picked) == static_cast<int>(picked.size()))
                basis.push_back(static_cast<int>(i));
            else
                picked.pop_back();
        }
        if (static_cast<int>(basis.size()) < n)
            throw unsupported_cone_error("inequality system does not have full rank");
    }

    // initial simplicial cone: columns of the inverse of the basis rows
    std::vector<std::vector<Int>> rays;
    {
        QMat ab;
        for (int i : basis) ab.push_back(to_qvec(a[i]));
        for (int j = 0; j < n; ++j) {
            QVec e(n, Rational(0));
            e[j] = Rational(1);
            auto x = solve_linear(ab, e);
            if (!x) throw unsupported_cone_error("singular initial basis");
            rays.push_back(clear_denominators(*x));
        }
    }

    std::vector<int> processed = basis;
    auto tight_set = [&](const std::vector<Int>& ray) {
        std::set<int> t;
        for (int i : processed)
            if (dot(a[i], ray) == 0) t.insert(i);
        return t;
    };

    for (std::size_t next = 0; next < a.size(); ++next) {
        if (std::find(basis.begin(), basis.end(), static_cast<int>(next)) != basis.end()) continue;
        const std::vector<Int>& row = a[next];
        std::vector<std::vector<Int>> pos, zero, neg;
        for (auto& r : rays) {
            Int v = dot(row, r);
            (v > 0 ? pos : v == 0 ? zero : neg).push_back(r);
        }
        if (neg.empty()) {
            processed.push_back(static_cast<int>(next));
            continue;
        }
        std::vector<std::vector<Int>> fresh;
        for (const auto& p : pos) {
            std::set<int> tp = tight_set(p);
            for (const auto& q : neg) {
                std::set<int> tq = tight_set(q);
                std::vector<int> common;
                std::set_intersection(tp.begin(), tp.end(), tq.begin(), tq.end(),
                                      std::back_inserter(common));
                QMat sub;
                for (int i : common) sub.push_back(to_qvec(a[i]));
                if (matrix_rank(std::move(sub)) != n - 2) continue;
                Int cp = dot(row, p), cq = dot(row, q);
                std::vector<Int> w(p.size());
                for (std::size_t c = 0; c < w.size(); ++c)
                    w[c] = checked_sub(checked_mul(cp, q[c]), checked_mul(cq, p[c]));
                make_primitive(w);
                fresh.push_back(std::move(w));
            }
        }
        rays.clear();
        for (auto& r : pos) rays.push_back(std::move(r));
        for (auto& r : zero) rays.push_back(std::move(r));
        for (auto& r : fresh) rays.push_back(std::move(r));
        std::sort(rays.begin(), rays.end());
        rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
        processed.push_back(static_cast<int>(next));
    }
    std::sort(rays.begin(), rays.end());
    return rays;
}

} // namespace detail

// Pointed, full-dimensional rational cone carrying both descriptions:
// primitive extreme rays in its own space and primitive inward facet normals
// in the paired space. Immutable once built.
class RationalPolyhedralCone {
public:
    // `strict` requires the given rays to be exactly the irredundant extreme
    // set; hull mode canonicalizes instead.
    static RationalPolyhedralCone from_rays(Space space, const std::vector<LatticeVector>& rays,
                                            const Pairing& pairing, bool strict = true) {
        if (rays.empty()) throw unsupported_cone_error("cone needs at least one ray");
        int n = pairing.rank;
        std::vector<std::vector<Int>> plain;
        for (const auto& r : rays) {
            if (r.space != space) throw input_error("ray space tag mismatch");
            if (r.rank() != n) throw input_error("ray rank mismatch");
            if (r.is_zero()) throw input_error("zero vector is not a ray");
            std::vector<Int> c = r.coords;
            make_primitive(c);
            plain.push_back(std::move(c));
        }
        if (integer_rank(plain) != n)
            throw unsupported_cone_error("cone is not full-dimensional");

        std::vector<std::vector<Int>> rows;
        for (const auto& r : plain) rows.push_back(detail::inequality_row(space, r, pairing));
        std::vector<std::vector<Int>> facets = detail::extreme_rays(rows, n);
        if (integer_rank(facets) != n)
            throw unsupported_cone_error("cone is not pointed");

        std::vector<std::vector<Int>> facet_rows;
        for (const auto& f : facets)
            facet_rows.push_back(detail::inequality_row(opposite(space), f, pairing));
        std::vector<std::vector<Int>> extremes = detail::extreme_rays(facet_rows, n);

        if (strict) {
            std::vector<std::vector<Int>> sorted = plain;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            if (sorted != extremes)
                throw input_error("ray list is not the irredundant set of extreme rays");
        }

        RationalPolyhedralCone k;
        k.space_ = space;
        k.pairing_ = pairing;
        for (auto& r : extremes) k.rays_.emplace_back(space, std::move(r));
        for (auto& f : facets) k.facets_.emplace_back(opposite(space), std::move(f));
        return k;
    }

    static RationalPolyhedralCone hull_of_rays(Space space, const std::vector<LatticeVector>& rays,
                                               const Pairing& pairing) {
        return from_rays(space, rays, pairing, /*strict=*/false);
    }

    Space space() const { return space_; }
    int rank() const { return pairing_.rank; }
    const Pairing& pairing() const { return pairing_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const std::vector<LatticeVector>& facets() const { return facets_; }

    bool contains(const LatticeVector& v) const {
        if (v.space != space_ || v.rank() != pairing_.rank)
            throw input_error("membership test on a vector from the wrong lattice");
        for (const auto& f : facets_)
            if (pairing_value(f, v, pairing_) < 0) return false;
        return true;
    }

    friend bool operator==(const RationalPolyhedralCone& a, const RationalPolyhedralCone& b) {
        return a.space_ == b.space_ && a.rays_ == b.rays_ && a.facets_ == b.facets_;
    }

private:
    Space space_ = Space::Curve;
    Pairing pairing_;
    std::vector<LatticeVector> rays_;
    std::vector<LatticeVector> facets_;
};

// The cone of vectors in the paired space pairing >= 0 with all of K. Rays of
// the dual are the facet normals of K and vice versa; the construction
// re-runs double description, so the two descriptions cross-check each other.
inline RationalPolyhedralCone dual_cone(const RationalPolyhedralCone& k, const Pairing& pairing) {
    return RationalPolyhedralCone::from_rays(opposite(k.space()), k.facets(), pairing);
}

} // namespace manin
