#include "doctest.h"

#include <random>

#include "manin/cone.hpp"

using namespace manin;

namespace {

LatticeVector cv(std::vector<Int> c) { return LatticeVector(Space::Curve, std::move(c)); }
LatticeVector dv(std::vector<Int> c) { return LatticeVector(Space::Divisor, std::move(c)); }

} // namespace

TEST_CASE("pairing evaluation") {
    Pairing id = Pairing::identity(3);
    CHECK(pair(dv({1, 0, 0}), cv({1, 0, 0}), id) == 1);
    CHECK(pair(dv({3, 1, 1}), cv({0, 1, 1}), id) == 2);
    CHECK(pair(dv({0, 0, 0}), cv({5, -7, 11}), id) == 0);
    CHECK_THROWS_AS(pair(dv({1, 0}), cv({1, 0, 0}), id), input_error);
    CHECK_THROWS_AS(pair(cv({1, 0, 0}), cv({1, 0, 0}), id), input_error);
}

TEST_CASE("positive orthant is self-dual") {
    Pairing id = Pairing::identity(2);
    auto k = RationalPolyhedralCone::from_rays(Space::Divisor, {dv({1, 0}), dv({0, 1})}, id);
    auto d = dual_cone(k, id);
    CHECK(d.space() == Space::Curve);
    CHECK(d.rays() == std::vector<LatticeVector>{cv({0, 1}), cv({1, 0})});
    CHECK(dual_cone(d, id).rays() == k.rays());
}

TEST_CASE("two-E5 effective divisor cone dualizes to the four nef rays") {
    Pairing id = Pairing::identity(3);
    auto eff = RationalPolyhedralCone::from_rays(
        Space::Divisor, {dv({0, 1, 0}), dv({0, 0, 1}), dv({2, 1, -1}), dv({2, -1, 1})}, id);
    auto nef = dual_cone(eff, id);
    std::vector<LatticeVector> expected = {cv({0, 1, 1}), cv({1, 0, 0}), cv({1, 0, 2}),
                                           cv({1, 2, 0})};
    CHECK(nef.rays() == expected);
    CHECK(nef.contains(cv({1, 1, 1})));
    CHECK_FALSE(nef.contains(cv({1, -1, 1})));
    // dual of dual gives back the effective cone
    CHECK(dual_cone(nef, id) == eff);
}

TEST_CASE("P(O+O(2)) effective cone dualizes to the positive quadrant") {
    Pairing id = Pairing::identity(2);
    auto eff = RationalPolyhedralCone::from_rays(Space::Divisor, {dv({0, 1}), dv({1, 0})}, id);
    auto nef = dual_cone(eff, id);
    CHECK(nef.rays() == std::vector<LatticeVector>{cv({0, 1}), cv({1, 0})});
}

TEST_CASE("degenerate cones are rejected") {
    Pairing id = Pairing::identity(2);
    // lower-dimensional
    CHECK_THROWS_AS(RationalPolyhedralCone::from_rays(Space::Curve, {cv({1, 1})}, id),
                    unsupported_cone_error);
    // not pointed: contains the x-axis as a line
    CHECK_THROWS_AS(
        RationalPolyhedralCone::from_rays(Space::Curve, {cv({1, 0}), cv({-1, 0}), cv({0, 1})}, id),
        unsupported_cone_error);
    // redundant generator in strict mode
    CHECK_THROWS_AS(
        RationalPolyhedralCone::from_rays(Space::Curve, {cv({1, 0}), cv({0, 1}), cv({1, 1})}, id),
        input_error);
    // hull mode canonicalizes instead
    auto k = RationalPolyhedralCone::hull_of_rays(Space::Curve,
                                                  {cv({1, 0}), cv({0, 1}), cv({1, 1})}, id);
    CHECK(k.rays() == std::vector<LatticeVector>{cv({0, 1}), cv({1, 0})});
    // non-primitive input rays are normalized
    auto k2 = RationalPolyhedralCone::from_rays(Space::Curve, {cv({2, 0}), cv({0, 3})}, id);
    CHECK(k2.rays() == std::vector<LatticeVector>{cv({0, 1}), cv({1, 0})});
}

TEST_CASE("dual of dual is the identity on every built-in cone") {
    // the six cones shipped with the models: effective and nef for each
    std::vector<std::pair<Space, std::vector<std::vector<Int>>>> cones = {
        {Space::Divisor, {{1}}},
        {Space::Curve, {{1}}},
        {Space::Divisor, {{0, 1}, {1, 0}}},
        {Space::Curve, {{0, 1}, {1, 0}}},
        {Space::Divisor, {{0, 0, 1}, {0, 1, 0}, {2, -1, 1}, {2, 1, -1}}},
        {Space::Curve, {{0, 1, 1}, {1, 0, 0}, {1, 0, 2}, {1, 2, 0}}},
    };
    for (const auto& [space, rays] : cones) {
        Pairing id = Pairing::identity(static_cast<int>(rays[0].size()));
        std::vector<LatticeVector> vs;
        for (const auto& r : rays) vs.emplace_back(space, r);
        auto k = RationalPolyhedralCone::from_rays(space, vs, id);
        auto dd = dual_cone(dual_cone(k, id), id);
        CHECK(dd == k);
    }
}

TEST_CASE("dual of dual is the identity on random pointed cones") {
    std::mt19937 rng(2024);
    int built = 0;
    while (built < 100) {
        int n = 2 + static_cast<int>(rng() % 3); // rank 2..4
        Pairing id = Pairing::identity(n);
        int count = n + static_cast<int>(rng() % 3);
        std::vector<LatticeVector> rays;
        for (int i = 0; i < count; ++i) {
            std::vector<Int> c(n);
            for (int j = 0; j < n; ++j) c[j] = static_cast<Int>(rng() % 7) - 3;
            rays.push_back(cv(std::move(c)));
        }
        bool has_zero = false;
        for (auto& r : rays) has_zero |= r.is_zero();
        if (has_zero) continue;
        try {
            auto k = RationalPolyhedralCone::hull_of_rays(Space::Curve, rays, id);
            auto dd = dual_cone(dual_cone(k, id), id);
            CHECK(dd.rays() == k.rays());
            CHECK(dd.facets() == k.facets());
            ++built;
        } catch (const unsupported_cone_error&) {
            // resample: random rays were not pointed/full-dimensional
        }
    }
}
