#pragma once

#include <vector>

#include "manin/model.hpp"
#include "manin/monoid.hpp"

namespace manin {

namespace detail {

inline LatticeVector cvec(std::vector<Int> c) { return LatticeVector(Space::Curve, std::move(c)); }
inline LatticeVector dvec(std::vector<Int> c) {
    return LatticeVector(Space::Divisor, std::move(c));
}

// Smooth quartic threefold in P4: Picard rank one, basis H with -K.(line)=1,
// no contractible divisors, and a unique counted component per nef class.
inline FanoThreefoldModel make_quartic() {
    FanoThreefoldModel m;
    m.name = "quartic";
    m.rank = 1;
    m.divisor_basis = {"H"};
    m.pairing = Pairing::identity(1);
    m.anticanonical = dvec({1});
    m.pseff_divisor_cone = RationalPolyhedralCone::from_rays(Space::Divisor, {dvec({1})}, m.pairing);
    m.nef_curve_cone = RationalPolyhedralCone::from_rays(Space::Curve, {cvec({1})}, m.pairing);
    m.line_classes = {{cvec({1}), "line"}};
    m.conic_classes = {{cvec({2}), "conic"}};
    m.component_rule.kind = ComponentRuleKind::UniquePerNefClass;
    m.component_rule.min_degree = 2;
    m.metadata.has_a_cover_iitaka0 = false;
    m.metadata.lattice_dual_pairing_assumed = true;
    m.metadata.named_curve_classes = {{"conic", cvec({2})}, {"line", cvec({1})}};
    m.metadata.divisor_identities = {{"anticanonical_is_hyperplane", {{{1, "-K"}}}, {{{1, "H"}}}}};
    return m;
}

// P(O + O(2)) over P2: rank two with basis (H, E0), H the pullback of the
// hyperplane class and E0 the rigid section, which is the unique E5 divisor.
// Curve coordinates are (H.C, E0.C); -K = 5H + 2E0.
inline FanoThreefoldModel make_p_o_o2() {
    FanoThreefoldModel m;
    m.name = "p_o_o2";
    m.rank = 2;
    m.divisor_basis = {"H", "E0"};
    m.pairing = Pairing::identity(2);
    m.anticanonical = dvec({5, 2});
    m.pseff_divisor_cone =
        RationalPolyhedralCone::from_rays(Space::Divisor, {dvec({0, 1}), dvec({1, 0})}, m.pairing);
    m.nef_curve_cone =
        RationalPolyhedralCone::from_rays(Space::Curve, {cvec({0, 1}), cvec({1, 0})}, m.pairing);
    m.contractible_divisors = {
        {"E0", dvec({0, 1}), EType::E5, {}, cvec({1, -2})},
    };
    m.fibrations = {{"p", FibrationKind::P1Bundle, 2, {cvec({0, 1})}, dvec({1, 0})}};
    m.line_classes = {{cvec({1, -2}), "ell0"}};
    m.conic_classes = {{cvec({0, 1}), "fiber"}};
    m.component_rule.kind = ComponentRuleKind::UniquePerNefClass;
    m.component_rule.min_degree = 2;
    m.metadata.has_a_cover_iitaka0 = false;
    m.metadata.lattice_dual_pairing_assumed = true;
    m.metadata.e5_threefold_index = 2;
    m.metadata.named_curve_classes = {{"ell0", cvec({1, -2})},
                                      {"fiber", cvec({0, 1})},
                                      {"moving_section_line", cvec({1, 0})}};
    m.metadata.divisor_identities = {
        {"anticanonical_sum", {{{1, "-K"}}}, {{{5, "H"}, {2, "E0"}}}}};
    // the degree-5 moving-section line degenerates to two fibers plus an E5 line
    m.metadata.relation_checks = {
        {{{"moving_section_line", 1}}, {{"fiber", 2}, {"ell0", 1}}}};
    return m;
}

// The Fano threefold with two E5 contractions: the blow-up of P(O + O(2))
// along a quartic curve in a minimal moving section. Divisor basis
// (H, E0, Einf) with H the pullback of the hyperplane class of P2 and E0,
// Einf the two E5 planes; curve coordinates are the pairings against that
// basis. The intersection table below is forced by the blow-up identities
// E = 2H + E0 - Einf, E + E' = 4H, -K = 3H + E0 + Einf together with the
// nef-generator relations and degree bookkeeping.
inline FanoThreefoldModel make_two_e5() {
    FanoThreefoldModel m;
    m.name = "two_e5";
    m.rank = 3;
    m.divisor_basis = {"H", "E0", "Einf"};
    m.pairing = Pairing::identity(3);
    m.anticanonical = dvec({3, 1, 1});
    m.pseff_divisor_cone = RationalPolyhedralCone::from_rays(
        Space::Divisor, {dvec({0, 0, 1}), dvec({0, 1, 0}), dvec({2, -1, 1}), dvec({2, 1, -1})},
        m.pairing);
    m.nef_curve_cone = RationalPolyhedralCone::from_rays(
        Space::Curve, {cvec({0, 1, 1}), cvec({1, 0, 0}), cvec({1, 0, 2}), cvec({1, 2, 0})},
        m.pairing);
    m.contractible_divisors = {
        {"E0", dvec({0, 1, 0}), EType::E5, {}, cvec({1, -2, 0})},
        {"Einf", dvec({0, 0, 1}), EType::E5, {}, cvec({1, 0, -2})},
        {"E", dvec({2, 1, -1}), EType::E1, {}, std::nullopt},
        {"Eprime", dvec({2, -1, 1}), EType::E1, {}, std::nullopt},
    };
    m.fibrations = {{"p", FibrationKind::ConicBundle, 2, {cvec({0, 1, 1})}, dvec({1, 0, 0})}};
    m.line_classes = {{cvec({1, -2, 0}), "ell0"},
                      {cvec({1, 0, -2}), "ellinf"},
                      {cvec({0, 0, 1}), "e_fiber"},
                      {cvec({0, 1, 0}), "eprime_fiber"}};
    m.conic_classes = {{cvec({0, 1, 1}), "p_fiber"}};
    m.component_rule.kind = ComponentRuleKind::UniquePerNefClass;
    m.component_rule.min_degree = 2;
    m.metadata.has_a_cover_iitaka0 = false;
    m.metadata.lattice_dual_pairing_assumed = true;
    m.metadata.e5_threefold_index = 6;
    m.metadata.named_curve_classes = {
        {"R1", cvec({0, 1, 1})}, {"R2", cvec({1, 0, 0})},   {"R3", cvec({1, 0, 2})},
        {"R4", cvec({1, 2, 0})}, {"R5", cvec({1, 0, 1})},   {"R6", cvec({1, 1, 0})},
        {"e_fiber", cvec({0, 0, 1})}, {"ell0", cvec({1, -2, 0})},
        {"ellinf", cvec({1, 0, -2})}, {"eprime_fiber", cvec({0, 1, 0})}};
    m.metadata.divisor_identities = {
        {"blowup_exceptional", {{{1, "E"}}}, {{{2, "H"}, {1, "E0"}, {-1, "Einf"}}}},
        {"quartic_preimage", {{{1, "E"}, {1, "Eprime"}}}, {{{4, "H"}}}},
        {"anticanonical_sum", {{{1, "-K"}}}, {{{3, "H"}, {1, "E0"}, {1, "Einf"}}}}};
    m.metadata.sign_checks = {
        {{{{1, "H"}, {1, "E0"}, {-1, "Einf"}}},
         {{"R1", "0"}, {"R2", "+"}, {"R3", "-1"}, {"R4", "+"}, {"R5", "0"}, {"R6", "+"}}},
        {{{{1, "E0"}, {-1, "Einf"}}}, {{"R1", "0"}, {"R2", "0"}, {"R5", "-1"}, {"R6", "1"}}}};
    m.metadata.relation_checks = {
        {{{"R2", 1}, {"R3", 1}}, {{"R5", 2}}},
        {{{"R2", 1}, {"R4", 1}}, {{"R6", 2}}},
        {{{"R1", 1}, {"R2", 2}}, {{"R5", 1}, {"R6", 1}}},
        {{{"R1", 1}, {"R2", 1}, {"R5", 1}}, {{"R3", 1}, {"R6", 1}}},
        {{{"R1", 1}, {"R2", 1}, {"R6", 1}}, {{"R4", 1}, {"R5", 1}}},
        {{{"R1", 1}, {"R5", 1}, {"R6", 1}}, {{"R3", 1}, {"R4", 1}}}};
    return m;
}

} // namespace detail

inline const std::vector<FanoThreefoldModel>& builtin_models() {
    static const std::vector<FanoThreefoldModel> models = {
        detail::make_quartic(), detail::make_p_o_o2(), detail::make_two_e5()};
    return models;
}

inline std::vector<std::string> builtin_model_names() {
    std::vector<std::string> names;
    for (const auto& m : builtin_models()) names.push_back(m.name);
    return names;
}

inline const FanoThreefoldModel& builtin_model(const std::string& name) {
    for (const auto& m : builtin_models())
        if (m.name == name) return m;
    throw input_error("unknown built-in model '" + name + "'");
}

// The nef monoid presentation of the two-E5 threefold: six generators with
// degrees (2,3,5,5,4,4) and the six relations that identify all fibers of
// the class homomorphism.
inline PresentedCommutativeMonoid builtin_two_e5_monoid() {
    using detail::cvec;
    auto W = [](std::vector<Int> v) { return Word(std::move(v)); };
    return PresentedCommutativeMonoid::create(
        "two_e5_nef_monoid", {"R1", "R2", "R3", "R4", "R5", "R6"}, {2, 3, 5, 5, 4, 4},
        {
            {W({0, 1, 1, 0, 0, 0}), W({0, 0, 0, 0, 2, 0})}, // R2 + R3 = 2 R5
            {W({0, 1, 0, 1, 0, 0}), W({0, 0, 0, 0, 0, 2})}, // R2 + R4 = 2 R6
            {W({1, 2, 0, 0, 0, 0}), W({0, 0, 0, 0, 1, 1})}, // R1 + 2 R2 = R5 + R6
            {W({1, 1, 0, 0, 1, 0}), W({0, 0, 1, 0, 0, 1})}, // R1 + R2 + R5 = R3 + R6
            {W({1, 1, 0, 0, 0, 1}), W({0, 0, 0, 1, 1, 0})}, // R1 + R2 + R6 = R4 + R5
            {W({1, 0, 0, 0, 1, 1}), W({0, 0, 1, 1, 0, 0})}, // R1 + R5 + R6 = R3 + R4
        },
        {cvec({0, 1, 1}), cvec({1, 0, 0}), cvec({1, 0, 2}), cvec({1, 2, 0}), cvec({1, 0, 1}),
         cvec({1, 1, 0})});
}

// Built-in presentation lookup by model name; only the two-E5 threefold
// ships one.
inline PresentedCommutativeMonoid builtin_monoid(const std::string& model_name) {
    if (model_name == "two_e5") return builtin_two_e5_monoid();
    throw input_error("no built-in monoid presentation for model '" + model_name + "'");
}

} // namespace manin
