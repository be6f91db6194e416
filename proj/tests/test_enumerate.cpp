#include "doctest.h"

#include <algorithm>
#include <functional>

#include "manin/enumerate.hpp"

using namespace manin;

namespace {

LatticeVector cv(std::vector<Int> c) { return LatticeVector(Space::Curve, std::move(c)); }
LatticeVector dv(std::vector<Int> c) { return LatticeVector(Space::Divisor, std::move(c)); }

RationalPolyhedralCone two_e5_nef() {
    return RationalPolyhedralCone::from_rays(
        Space::Curve, {cv({0, 1, 1}), cv({1, 0, 0}), cv({1, 0, 2}), cv({1, 2, 0})},
        Pairing::identity(3));
}

// Independent oracle: scan a fixed symmetric box and keep cone points in the
// degree range. Deliberately ignorant of the implementation's bounding logic.
std::vector<LatticeVector> naive_scan(const RationalPolyhedralCone& k, const LatticeVector& degree,
                                      Int d_max, Int box) {
    std::vector<LatticeVector> out;
    int n = k.rank();
    std::vector<Int> x(n, -box);
    while (true) {
        LatticeVector v(k.space(), x);
        Int d = pairing_value(degree, v, k.pairing());
        if (d >= 1 && d <= d_max && k.contains(v)) out.push_back(v);
        int c = n - 1;
        while (c >= 0 && x[c] == box) {
            x[c] = -box;
            --c;
        }
        if (c < 0) break;
        ++x[c];
    }
    std::sort(out.begin(), out.end(), [&](const LatticeVector& a, const LatticeVector& b) {
        Int da = pairing_value(degree, a, k.pairing());
        Int db = pairing_value(degree, b, k.pairing());
        if (da != db) return da < db;
        return a.coords < b.coords;
    });
    return out;
}

} // namespace

TEST_CASE("rank one enumeration is the multiples of the generator") {
    Pairing id = Pairing::identity(1);
    auto k = RationalPolyhedralCone::from_rays(Space::Curve, {cv({1})}, id);
    auto pts = enumerate_lattice_points(k, dv({1}), 5);
    REQUIRE(pts.size() == 5);
    for (Int e = 1; e <= 5; ++e) CHECK(pts[e - 1] == cv({e}));
}

TEST_CASE("two-E5 nef points of low degree") {
    auto k = two_e5_nef();
    LatticeVector antik = dv({3, 1, 1});

    auto deg2 = enumerate_lattice_points(k, antik, 2);
    REQUIRE(deg2.size() == 1);
    CHECK(deg2[0] == cv({0, 1, 1}));

    auto deg5 = enumerate_lattice_points(k, antik, 5);
    std::vector<LatticeVector> expected = {
        cv({0, 1, 1}),                              // R1, degree 2
        cv({1, 0, 0}),                              // R2, degree 3
        cv({0, 2, 2}), cv({1, 0, 1}), cv({1, 1, 0}),// 2R1, R5, R6, degree 4
        cv({1, 0, 2}), cv({1, 1, 1}), cv({1, 2, 0}) // R3, R1+R2, R4, degree 5
    };
    CHECK(deg5 == expected);
}

TEST_CASE("enumeration agrees with the naive box-scan oracle") {
    auto k = two_e5_nef();
    LatticeVector antik = dv({3, 1, 1});
    for (Int d : {1, 2, 3, 7, 12})
        CHECK(enumerate_lattice_points(k, antik, d) == naive_scan(k, antik, d, 14));

    Pairing id2 = Pairing::identity(2);
    auto wedge = RationalPolyhedralCone::from_rays(Space::Curve, {cv({1, 0}), cv({1, 2})}, id2);
    LatticeVector g = dv({1, 0});
    for (Int d : {1, 5, 12}) CHECK(enumerate_lattice_points(wedge, g, d) == naive_scan(wedge, g, d, 30));

    // quartic and P(O+O(2)) nef cones
    auto line = RationalPolyhedralCone::from_rays(Space::Curve, {cv({1})}, Pairing::identity(1));
    CHECK(enumerate_lattice_points(line, dv({1}), 12) == naive_scan(line, dv({1}), 12, 12));
    auto quadrant =
        RationalPolyhedralCone::from_rays(Space::Curve, {cv({0, 1}), cv({1, 0})}, id2);
    CHECK(enumerate_lattice_points(quadrant, dv({5, 2}), 12) ==
          naive_scan(quadrant, dv({5, 2}), 12, 12));

    // the two-E5 effective divisor cone, graded by an interior nef class
    Pairing id3 = Pairing::identity(3);
    auto eff = RationalPolyhedralCone::from_rays(
        Space::Divisor, {dv({0, 0, 1}), dv({0, 1, 0}), dv({2, -1, 1}), dv({2, 1, -1})}, id3);
    LatticeVector interior = cv({1, 1, 1});
    CHECK(enumerate_lattice_points(eff, interior, 12) == naive_scan(eff, interior, 12, 25));
}

TEST_CASE("grading errors") {
    Pairing id = Pairing::identity(2);
    auto k = RationalPolyhedralCone::from_rays(Space::Curve, {cv({1, 0}), cv({0, 1})}, id);
    CHECK_THROWS_AS(enumerate_lattice_points(k, dv({1, 0}), 4), grading_error);
    CHECK_THROWS_AS(enumerate_lattice_points(k, dv({1, -1}), 4), grading_error);
    CHECK_THROWS_AS(enumerate_lattice_points(k, cv({1, 1}), 4), input_error);
    CHECK(enumerate_lattice_points(k, dv({1, 1}), 0).empty());
}

TEST_CASE("hilbert basis of the width-two wedge") {
    Pairing id = Pairing::identity(2);
    auto k = RationalPolyhedralCone::from_rays(Space::Curve, {cv({1, 0}), cv({1, 2})}, id);
    auto basis = hilbert_basis(k, dv({1, 0}), 8);
    std::vector<LatticeVector> expected = {cv({1, 0}), cv({1, 1}), cv({1, 2})};
    CHECK(basis == expected);
}

TEST_CASE("hilbert basis of a unimodular cone is its rays") {
    Pairing id = Pairing::identity(3);
    auto k = RationalPolyhedralCone::from_rays(Space::Curve,
                                               {cv({1, 0, 0}), cv({0, 1, 0}), cv({0, 0, 1})}, id);
    auto basis = hilbert_basis(k, dv({1, 1, 1}), 6);
    std::vector<LatticeVector> expected = {cv({0, 0, 1}), cv({0, 1, 0}), cv({1, 0, 0})};
    CHECK(basis == expected);
}

TEST_CASE("hilbert basis of the two-E5 nef cone is the six generators") {
    auto k = two_e5_nef();
    auto basis = hilbert_basis(k, dv({3, 1, 1}), 20);
    std::vector<LatticeVector> expected = {cv({0, 1, 1}), cv({1, 0, 0}), cv({1, 0, 1}),
                                           cv({1, 1, 0}), cv({1, 0, 2}), cv({1, 2, 0})};
    CHECK(basis == expected);
}

TEST_CASE("hilbert basis elements are irreducible and cover all low points") {
    auto k = two_e5_nef();
    LatticeVector antik = dv({3, 1, 1});
    auto basis = hilbert_basis(k, antik, 20);
    auto pts = enumerate_lattice_points(k, antik, 20);
    // (a) no basis element is the sum of two nonzero lattice points of K
    for (const auto& h : basis) {
        Int dh = pairing_value(antik, h, k.pairing());
        for (const auto& u : pts) {
            if (pairing_value(antik, u, k.pairing()) >= dh) continue;
            LatticeVector rest = h - u;
            CHECK_FALSE((!rest.is_zero() && k.contains(rest)));
        }
    }
    // (b) every enumerated point decomposes over the basis: bounded knapsack
    std::function<bool(LatticeVector, std::size_t)> rec = [&](LatticeVector t,
                                                              std::size_t i) -> bool {
        if (t.is_zero()) return true;
        if (i == basis.size()) return false;
        for (LatticeVector cur = t;;) {
            if (rec(cur, i + 1)) return true;
            cur = cur - basis[i];
            if (pairing_value(antik, cur, k.pairing()) < 0) return false;
        }
    };
    for (const auto& p : pts) CHECK(rec(p, 0));
}
