#include "doctest.h"

#include <random>

#include "manin/builtin_models.hpp"
#include "manin/invariants.hpp"

using namespace manin;

namespace {

LatticeVector dv(std::vector<Int> c) { return LatticeVector(Space::Divisor, std::move(c)); }

// Check the finite-case certificate: coefficients are nonnegative and
// rebuild a L + K over the effective rays, exactly.
void check_certificate(const FanoThreefoldModel& m, const LatticeVector& l,
                       const AInvariantResult& a) {
    REQUIRE(a.finite);
    QVec rebuilt(m.rank, Rational(0));
    for (const auto& [ray_index, coeff] : a.certificate) {
        CHECK(coeff.sign() >= 0);
        for (int c = 0; c < m.rank; ++c)
            rebuilt[c] +=
                coeff * rational_from_int(m.pseff_divisor_cone.rays()[ray_index].coords[c]);
    }
    for (int c = 0; c < m.rank; ++c) {
        Rational expected = a.value * rational_from_int(l.coords[c]) -
                            rational_from_int(m.anticanonical.coords[c]);
        CHECK(rebuilt[c] == expected);
    }
}

// Random divisor classes passing the nef check, by rejection.
std::vector<LatticeVector> random_nef_divisors(const FanoThreefoldModel& m, int count,
                                               unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<LatticeVector> out;
    while (static_cast<int>(out.size()) < count) {
        std::vector<Int> c(m.rank);
        for (int i = 0; i < m.rank; ++i) c[i] = static_cast<Int>(rng() % 9) - 3;
        LatticeVector l = dv(c);
        bool nef = true, zero = true;
        for (const auto& ray : m.nef_curve_cone.rays()) {
            Int v = pair(l, ray, m.pairing);
            nef &= v >= 0;
            zero &= v == 0;
        }
        if (nef && !zero) out.push_back(l);
    }
    return out;
}

} // namespace

TEST_CASE("a-invariant of the anticanonical class is 1 with a zero certificate") {
    for (const auto& m : builtin_models()) {
        auto a = a_invariant(m, m.anticanonical);
        REQUIRE(a.finite);
        CHECK(a.value == Rational(1));
        check_certificate(m, m.anticanonical, a);
        // scaling: a(X, cL) = a(X, L)/c
        auto a2 = a_invariant(m, 2 * m.anticanonical);
        CHECK(a2.value == Rational(1, 2));
    }
}

TEST_CASE("a-invariant of H on the two-E5 model is infinite with a verified witness") {
    const auto& m = builtin_model("two_e5");
    auto a = a_invariant(m, dv({1, 0, 0}));
    CHECK_FALSE(a.finite);
    REQUIRE(a.witness.has_value());
    const LatticeVector& w = *a.witness;
    // witness is nonnegative on every effective ray
    for (const auto& ray : m.pseff_divisor_cone.rays()) CHECK(pair(ray, w, m.pairing) >= 0);
    // kills L and is negative on K
    CHECK(pair(dv({1, 0, 0}), w, m.pairing) == 0);
    CHECK(pair(-1 * m.anticanonical, w, m.pairing) < 0);
}

TEST_CASE("a-invariant rejects non-nef input") {
    const auto& m = builtin_model("two_e5");
    // -E0 is negative on the nef ray R4 = (1,2,0)
    CHECK_THROWS_AS(a_invariant(m, dv({0, -1, 0})), input_error);
    CHECK_THROWS_AS(a_invariant(m, dv({0, -1})), input_error);
}

TEST_CASE("b-invariant of the anticanonical class is the Picard rank") {
    CHECK(b_invariant(builtin_model("quartic"), builtin_model("quartic").anticanonical) == 1);
    CHECK(b_invariant(builtin_model("p_o_o2"), builtin_model("p_o_o2").anticanonical) == 2);
    CHECK(b_invariant(builtin_model("two_e5"), builtin_model("two_e5").anticanonical) == 3);
    // scaling leaves the face functional unchanged
    for (Int c : {2, 3, 5})
        CHECK(b_invariant(builtin_model("two_e5"), c * builtin_model("two_e5").anticanonical) == 3);
    CHECK_THROWS_AS(b_invariant(builtin_model("two_e5"), dv({1, 0, 0})),
                    undefined_invariant_error);
}

TEST_CASE("scaling law on random nef divisors") {
    for (const auto& m : builtin_models()) {
        for (const auto& l : random_nef_divisors(m, 20, 4242)) {
            auto a = a_invariant(m, l);
            if (!a.finite) continue;
            check_certificate(m, l, a);
            for (Int c : {2, 3, 5}) {
                auto ac = a_invariant(m, c * l);
                REQUIRE(ac.finite);
                CHECK(ac.value == a.value / rational_from_int(c));
                CHECK(b_invariant(m, c * l) == b_invariant(m, l));
            }
        }
    }
}

TEST_CASE("monotonicity: enlarging L by an effective class cannot raise a") {
    std::mt19937 rng(777);
    for (const auto& m : builtin_models()) {
        auto samples = random_nef_divisors(m, 10, 90210);
        for (const auto& l : samples) {
            // random nonnegative combination of effective rays
            LatticeVector bump(Space::Divisor, std::vector<Int>(m.rank, 0));
            for (const auto& ray : m.pseff_divisor_cone.rays())
                bump = bump + static_cast<Int>(rng() % 3) * ray;
            LatticeVector bigger = l + bump;
            auto a_small = a_invariant(m, l);
            auto a_big = a_invariant(m, bigger);
            if (!a_big.finite) {
                CHECK_FALSE(a_small.finite);
            } else if (a_small.finite) {
                CHECK(a_big.value <= a_small.value);
            }
        }
    }
}
