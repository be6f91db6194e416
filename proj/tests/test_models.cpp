#include "doctest.h"

#include "manin/builtin_models.hpp"
#include "manin/model_json.hpp"

using namespace manin;

namespace {
LatticeVector cv(std::vector<Int> c) { return LatticeVector(Space::Curve, std::move(c)); }
}

TEST_CASE("all built-in models validate completely") {
    for (const auto& m : builtin_models()) {
        auto report = validate_model(m);
        for (const auto& check : report.checks) {
            INFO(m.name, ": ", check.name, ": ", check.detail);
            CHECK(check.passed);
        }
        CHECK(report.all_passed());
    }
}

TEST_CASE("corrupted nef cone fails the dual check without throwing") {
    FanoThreefoldModel m = builtin_model("two_e5");
    m.nef_curve_cone = RationalPolyhedralCone::from_rays(
        Space::Curve, {cv({0, 1, 1}), cv({1, 0, 0}), cv({1, 0, 3}), cv({1, 2, 0})}, m.pairing);
    auto report = validate_model(m);
    CHECK_FALSE(report.all_passed());
    bool dual_failed = false;
    for (const auto& check : report.checks)
        if (check.name == "nef cone is the dual of the effective cone" && !check.passed)
            dual_failed = true;
    CHECK(dual_failed);
}

TEST_CASE("minimal degrees of the built-ins") {
    CHECK(minimal_degree(builtin_model("quartic")) == 1);
    CHECK(minimal_degree(builtin_model("two_e5")) == 1);
    CHECK(minimal_degree(builtin_model("p_o_o2")) == 1);

    FanoThreefoldModel m = builtin_model("quartic");
    m.anticanonical = LatticeVector(Space::Divisor, {0});
    CHECK_THROWS_AS(minimal_degree(m), model_error);
}

TEST_CASE("two-E5 intersection table reproduces the derived facts") {
    const auto& m = builtin_model("two_e5");
    auto R = [&](const std::string& n) { return *m.named_class(n); };
    // degrees (2,3,5,5,4,4)
    CHECK(m.degree_of(R("R1")) == 2);
    CHECK(m.degree_of(R("R2")) == 3);
    CHECK(m.degree_of(R("R3")) == 5);
    CHECK(m.degree_of(R("R4")) == 5);
    CHECK(m.degree_of(R("R5")) == 4);
    CHECK(m.degree_of(R("R6")) == 4);
    // the six relations as vector identities
    CHECK(R("R2") + R("R3") == 2 * R("R5"));
    CHECK(R("R2") + R("R4") == 2 * R("R6"));
    CHECK(R("R1") + 2 * R("R2") == R("R5") + R("R6"));
    CHECK(R("R1") + R("R2") + R("R5") == R("R3") + R("R6"));
    CHECK(R("R1") + R("R2") + R("R6") == R("R4") + R("R5"));
    CHECK(R("R1") + R("R5") + R("R6") == R("R3") + R("R4"));
    // H + E0 - Einf separates R3; E0 - Einf separates R5 from R6
    LatticeVector f1(Space::Divisor, {1, 1, -1});
    CHECK(pair(f1, R("R1"), m.pairing) == 0);
    CHECK(pair(f1, R("R2"), m.pairing) > 0);
    CHECK(pair(f1, R("R3"), m.pairing) == -1);
    CHECK(pair(f1, R("R4"), m.pairing) > 0);
    CHECK(pair(f1, R("R5"), m.pairing) == 0);
    CHECK(pair(f1, R("R6"), m.pairing) > 0);
    LatticeVector f2(Space::Divisor, {0, 1, -1});
    CHECK(pair(f2, R("R1"), m.pairing) == 0);
    CHECK(pair(f2, R("R2"), m.pairing) == 0);
    CHECK(pair(f2, R("R5"), m.pairing) == -1);
    CHECK(pair(f2, R("R6"), m.pairing) == 1);
}

TEST_CASE("R1+R2 is the only nef class of degree <= 5 beyond generator multiples") {
    const auto& m = builtin_model("two_e5");
    auto basis = hilbert_basis(m.nef_curve_cone, m.anticanonical, 10);
    auto pts = enumerate_lattice_points(m.nef_curve_cone, m.anticanonical, 5);
    std::vector<LatticeVector> extra;
    for (const auto& p : pts) {
        bool generator_multiple = false;
        for (const auto& h : basis) {
            Int dh = m.degree_of(h), dp = m.degree_of(p);
            if (dp % dh == 0 && (dp / dh) * h == p) generator_multiple = true;
        }
        if (!generator_multiple) extra.push_back(p);
    }
    REQUIRE(extra.size() == 1);
    CHECK(extra[0] == cv({1, 1, 1}));
}

TEST_CASE("every E5 record pairs to -2 with its line and the line has degree 1") {
    for (const auto& m : builtin_models())
        for (const auto& d : m.contractible_divisors) {
            if (d.etype != EType::E5) continue;
            REQUIRE(d.line_class.has_value());
            CHECK(pair(d.divisor_class, *d.line_class, m.pairing) == -2);
            CHECK(m.degree_of(*d.line_class) == 1);
        }
}

TEST_CASE("the moving-section line of P(O+O(2)) is two fibers plus an E5 line") {
    const auto& m = builtin_model("p_o_o2");
    auto line = *m.named_class("moving_section_line");
    auto fiber = *m.named_class("fiber");
    auto ell = *m.named_class("ell0");
    CHECK(m.degree_of(line) == 5);
    CHECK(line == 2 * fiber + ell);
}

TEST_CASE("classify_class on the two-E5 model") {
    const auto& m = builtin_model("two_e5");

    auto r1 = classify_class(m, cv({0, 1, 1}));
    CHECK(r1.nef);
    CHECK(r1.degree == 2);
    CHECK(r1.fibration_contracted);
    CHECK(r1.contracted_by == std::vector<std::string>{"p"});
    CHECK(r1.matched_conics == std::vector<std::string>{"p_fiber"});
    CHECK_FALSE(r1.good_class);

    auto r2 = classify_class(m, cv({1, 0, 0}));
    CHECK(r2.nef);
    CHECK(r2.degree == 3);
    CHECK_FALSE(r2.fibration_contracted);
    CHECK(r2.good_class);

    auto ell0 = classify_class(m, cv({1, -2, 0}));
    CHECK_FALSE(ell0.nef);
    CHECK(ell0.degree == 1);
    CHECK(ell0.matched_lines == std::vector<std::string>{"ell0"});
    CHECK_FALSE(ell0.good_class);

    CHECK_THROWS_AS(classify_class(m, cv({1, 0})), input_error);
}

TEST_CASE("models round-trip through their shipped JSON files") {
    for (const auto& m : builtin_models()) {
        std::string path = std::string(MANIN_SOURCE_DIR) + "/models/" + m.name + ".json";
        FanoThreefoldModel loaded = load_model_file(path);
        CHECK(model_to_json(loaded) == model_to_json(m));
        CHECK(validate_model(loaded).all_passed());
    }
}

TEST_CASE("strict parsing rejects unknown and malformed fields") {
    Json j = model_to_json(builtin_model("quartic"));
    Json bad = j;
    bad["surprise"] = 1;
    CHECK_THROWS_AS(model_from_json(bad), parse_error);

    Json bad_meta = j;
    bad_meta["metadata"]["typo_key"] = true;
    CHECK_THROWS_AS(model_from_json(bad_meta), parse_error);

    Json missing = j;
    missing.erase("anticanonical");
    CHECK_THROWS_AS(model_from_json(missing), parse_error);

    // nef_curve_rays must match the computed dual
    Json wrong_nef = model_to_json(builtin_model("two_e5"));
    wrong_nef["nef_curve_rays"] = Json::array({Json::array({0, 1, 1}), Json::array({1, 0, 0}),
                                               Json::array({1, 0, 3}), Json::array({1, 2, 0})});
    CHECK_THROWS_AS(model_from_json(wrong_nef), model_error);
}

TEST_CASE("model resolution falls back to the built-ins") {
    FanoThreefoldModel m = resolve_model("quartic");
    CHECK(m.name == "quartic");
    CHECK_THROWS_AS(resolve_model("p2"), input_error);
}

TEST_CASE("MANIN_MODEL_PATH prepends to the search path") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "manin_model_path_test";
    fs::create_directories(dir);
    Json j = model_to_json(builtin_model("quartic"));
    j["name"] = "custom_quartic";
    {
        std::ofstream out(dir / "custom_quartic.json");
        out << j.dump(2) << "\n";
    }
    setenv("MANIN_MODEL_PATH", dir.c_str(), 1);
    FanoThreefoldModel m = resolve_model("custom_quartic");
    CHECK(m.name == "custom_quartic");
    CHECK(validate_model(m).all_passed());
    unsetenv("MANIN_MODEL_PATH");
    CHECK_THROWS_AS(resolve_model("custom_quartic"), input_error);
    // explicit paths always load directly
    FanoThreefoldModel direct = load_model_file((dir / "custom_quartic.json").string());
    CHECK(direct.name == "custom_quartic");
    fs::remove_all(dir);
}
