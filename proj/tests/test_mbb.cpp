#include "doctest.h"

#include "manin/builtin_models.hpp"
#include "manin/mbb.hpp"

using namespace manin;

namespace {
LatticeVector cv(std::vector<Int> c) { return LatticeVector(Space::Curve, std::move(c)); }

bool has_pair(const std::vector<Breaking>& breakings, const LatticeVector& a,
              const LatticeVector& b) {
    for (const auto& br : breakings)
        if ((br.beta == a && br.gamma == b) || (br.beta == b && br.gamma == a)) return true;
    return false;
}
} // namespace

TEST_CASE("thresholds: 5 without an E5 divisor, 6 with one") {
    CHECK(mbb_threshold(builtin_model("quartic")) == 5);
    CHECK(mbb_threshold(builtin_model("two_e5")) == 6);
    CHECK(mbb_threshold(builtin_model("p_o_o2")) == 6);
}

TEST_CASE("free breakings on the two-E5 model") {
    const auto& m = builtin_model("two_e5");
    // R1 + R2 splits as {R1, R2}
    auto splits = free_breakings(m, cv({1, 1, 1}));
    CHECK(has_pair(splits, cv({0, 1, 1}), cv({1, 0, 0})));
    // R3 has no free breaking
    CHECK(free_breakings(m, cv({1, 0, 2})).empty());
    // parts sum to the class for every result
    for (const auto& b : free_breakings(m, cv({2, 2, 2}))) {
        CHECK(b.beta + b.gamma == cv({2, 2, 2}));
        CHECK(m.degree_of(b.beta) >= 2);
        CHECK(m.degree_of(b.gamma) >= 2);
        CHECK(m.is_nef(b.beta));
        CHECK(m.is_nef(b.gamma));
    }
    CHECK_THROWS_AS(free_breakings(m, cv({1, -2, 0})), input_error);
}

TEST_CASE("free breakings are unordered and listed once") {
    const auto& m = builtin_model("quartic");
    // degree 4 = 2 + 2 is the only partition into parts >= 2
    auto splits = free_breakings(m, cv({4}));
    REQUIRE(splits.size() == 1);
    CHECK(splits[0].beta == cv({2}));
    CHECK(splits[0].gamma == cv({2}));
    // degree 7: {2,5}, {3,4}
    CHECK(free_breakings(m, cv({7})).size() == 2);
}

TEST_CASE("E5 chain breakings find the documented chains") {
    const auto& m = builtin_model("two_e5");
    // R3 = 2 R1 + ell0
    auto chains3 = e5_chain_breakings(m, cv({1, 0, 2}));
    bool found3 = false;
    for (const auto& b : chains3)
        if (b.line_label == "ell0" && b.beta == cv({0, 1, 1}) && b.gamma == cv({0, 1, 1}))
            found3 = true;
    CHECK(found3);
    // R4 = 2 R1 + ellinf
    auto chains4 = e5_chain_breakings(m, cv({1, 2, 0}));
    bool found4 = false;
    for (const auto& b : chains4)
        if (b.line_label == "ellinf" && b.beta == cv({0, 1, 1}) && b.gamma == cv({0, 1, 1}))
            found4 = true;
    CHECK(found4);
    // annotations on the R3 chain: both parts degree 2 <= 4, R3 . E0 = 0, degree 5 <= 9
    for (const auto& b : chains3)
        if (b.line_label == "ell0") {
            CHECK(b.parts_le_4);
            CHECK(b.e5_pairing_zero);
            CHECK(b.degree_le_9);
        }

    // moving-section line of P(O+O(2)) = fiber + ell0 + fiber
    const auto& p = builtin_model("p_o_o2");
    auto chains = e5_chain_breakings(p, cv({1, 0}));
    bool found = false;
    for (const auto& b : chains)
        if (b.beta == cv({0, 1}) && b.gamma == cv({0, 1}) && b.line_label == "ell0") found = true;
    CHECK(found);

    // no E5 divisors: empty, not an error
    CHECK(e5_chain_breakings(builtin_model("quartic"), cv({5})).empty());
}

TEST_CASE("verify_mbb on the three built-ins up to degree 40") {
    auto two_e5 = verify_mbb(builtin_model("two_e5"), 40);
    CHECK(two_e5.violations.empty());
    REQUIRE(two_e5.degree5_exceptions.size() == 2);
    CHECK(two_e5.degree5_exceptions[0].cls == cv({1, 0, 2}));
    CHECK(two_e5.degree5_exceptions[1].cls == cv({1, 2, 0}));
    for (const auto& e : two_e5.degree5_exceptions) CHECK_FALSE(e.chains.empty());

    auto quartic = verify_mbb(builtin_model("quartic"), 40);
    CHECK(quartic.violations.empty());
    CHECK(quartic.degree5_exceptions.empty());

    auto p_o_o2 = verify_mbb(builtin_model("p_o_o2"), 40);
    CHECK(p_o_o2.violations.empty());
    REQUIRE(p_o_o2.degree5_exceptions.size() == 1);
    CHECK(p_o_o2.degree5_exceptions[0].cls == cv({1, 0}));
    CHECK_FALSE(p_o_o2.degree5_exceptions[0].chains.empty());
}

TEST_CASE("verify_mbb is deterministic across job counts") {
    auto serial = verify_mbb(builtin_model("two_e5"), 25, 1);
    auto parallel = verify_mbb(builtin_model("two_e5"), 25, 2);
    CHECK(serial.classes_checked == parallel.classes_checked);
    CHECK(serial.violations == parallel.violations);
    REQUIRE(serial.degree5_exceptions.size() == parallel.degree5_exceptions.size());
    for (std::size_t i = 0; i < serial.degree5_exceptions.size(); ++i)
        CHECK(serial.degree5_exceptions[i].cls == parallel.degree5_exceptions[i].cls);
}

TEST_CASE("verify_mbb rejects bounds below the threshold") {
    CHECK_THROWS_AS(verify_mbb(builtin_model("quartic"), 3), input_error);
    CHECK_THROWS_AS(verify_mbb(builtin_model("two_e5"), 5), input_error);
}
