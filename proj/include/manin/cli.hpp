#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "manin/builtin_models.hpp"
#include "manin/classification.hpp"
#include "manin/counting.hpp"
#include "manin/invariants.hpp"
#include "manin/mbb.hpp"
#include "manin/model_json.hpp"
#include "manin/monoid.hpp"
#include "manin/report_json.hpp"

namespace manin::cli {

namespace detail {

inline LatticeVector parse_curve_class(const std::string& text, int rank) {
    std::vector<Int> coords;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string part =
            text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        try {
            std::size_t used = 0;
            coords.push_back(static_cast<Int>(std::stoll(part, &used)));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (...) {
            throw input_error("cannot parse integer coordinate '" + part + "'");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (static_cast<int>(coords.size()) != rank)
        throw input_error("expected " + std::to_string(rank) + " coordinates, got " +
                          std::to_string(coords.size()));
    return LatticeVector(Space::Curve, std::move(coords));
}

inline LatticeVector parse_divisor_class(const std::string& text, int rank) {
    LatticeVector v = parse_curve_class(text, rank);
    v.space = Space::Divisor;
    return v;
}

} // namespace detail

// Full batch interface. Returns the process exit code: 0 on success, 1 when
// a verification ran and failed (breaking violations, presentation
// violations, validation failure), 2 on input or usage errors. All error
// text goes to `err`; reports stream to `out`.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact lattice toolkit for curve classes on Fano threefolds"};
    app.fallthrough(); // global flags may follow the subcommand
    app.require_subcommand(1);

    std::string format = "table";
    int jobs = 1;
    app.add_option("--format", format, "output format: json, csv, or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    app.add_option("--jobs", jobs, "worker threads for verification sweeps")
        ->check(CLI::PositiveNumber);

    int exit_code = 0;
    auto emit = [&](const Json& j) { out << render_report(j, format); };

    // models {list, show, validate}
    auto* models_cmd = app.add_subcommand("models", "list, show, or validate models");
    models_cmd->require_subcommand(1);
    auto* models_list = models_cmd->add_subcommand("list", "names of the built-in models");
    models_list->callback([&]() {
        Json j;
        j["models"] = builtin_model_names();
        emit(j);
    });
    std::string show_model;
    auto* models_show = models_cmd->add_subcommand("show", "full JSON description of a model");
    models_show->add_option("--model", show_model, "model name or path")->required();
    models_show->callback([&]() { emit(model_to_json(resolve_model(show_model))); });
    std::string validate_model_name;
    auto* models_validate = models_cmd->add_subcommand("validate", "re-derive model invariants");
    models_validate->add_option("--model", validate_model_name, "model name or path")->required();
    models_validate->callback([&]() {
        auto report = validate_model(resolve_model(validate_model_name));
        emit(to_json(report));
        if (!report.all_passed()) exit_code = 1;
    });

    // enumerate
    std::string enum_model;
    Int enum_degree = 0;
    auto* enumerate_cmd =
        app.add_subcommand("enumerate", "nef lattice points up to an anticanonical degree");
    enumerate_cmd->add_option("--model", enum_model, "model name or path")->required();
    enumerate_cmd->add_option("--degree", enum_degree, "degree bound")->required();
    enumerate_cmd->callback([&]() {
        FanoThreefoldModel m = resolve_model(enum_model);
        auto pts = enumerate_lattice_points(m.nef_curve_cone, m.anticanonical, enum_degree);
        Json j;
        j["model"] = m.name;
        j["degree_bound"] = enum_degree;
        j["count"] = pts.size();
        Json arr = Json::array();
        for (const auto& p : pts) {
            Json e;
            e["class"] = json_of(p);
            e["degree"] = m.degree_of(p);
            arr.push_back(e);
        }
        j["points"] = arr;
        emit(j);
    });

    // hilbert
    std::string hilbert_model;
    Int hilbert_check = 20;
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert basis of the nef curve cone");
    hilbert_cmd->add_option("--model", hilbert_model, "model name or path")->required();
    hilbert_cmd->add_option("--check-bound", hilbert_check,
                            "re-verify decompositions up to this degree");
    hilbert_cmd->callback([&]() {
        FanoThreefoldModel m = resolve_model(hilbert_model);
        auto basis = hilbert_basis(m.nef_curve_cone, m.anticanonical, hilbert_check);
        Json j;
        j["model"] = m.name;
        j["check_bound"] = hilbert_check;
        Json arr = Json::array();
        for (const auto& b : basis) {
            Json e;
            e["class"] = json_of(b);
            e["degree"] = m.degree_of(b);
            arr.push_back(e);
        }
        j["basis"] = arr;
        emit(j);
    });

    // count
    std::string count_model, count_q;
    Int count_degree = 0;
    auto* count_cmd = app.add_subcommand("count", "exact counting-function value N(X,-K,q,d)");
    count_cmd->add_option("--model", count_model, "model name or path")->required();
    count_cmd->add_option("--q", count_q, "rational q as p/r")->required();
    count_cmd->add_option("--degree", count_degree, "degree d")->required();
    count_cmd->callback([&]() {
        FanoThreefoldModel m = resolve_model(count_model);
        Rational q = Rational::from_string(count_q);
        Json j;
        j["model"] = m.name;
        j["q"] = json_of(q);
        j["d"] = count_degree;
        j["r"] = minimal_degree(m);
        j["N"] = json_of(count_exact(m, q, count_degree));
        emit(j);
    });

    // alpha
    std::string alpha_model;
    auto* alpha_cmd = app.add_subcommand("alpha", "leading constant alpha(X,-K)");
    alpha_cmd->add_option("--model", alpha_model, "model name or path")->required();
    alpha_cmd->callback([&]() {
        FanoThreefoldModel m = resolve_model(alpha_model);
        Rational primary = alpha_constant(m);
        // a second, rotated triangulation must agree exactly
        Rational alternate = alpha_constant_from_vertex(m, 1);
        if (!(primary == alternate)) throw model_error("triangulations disagree on alpha");
        Json j;
        j["model"] = m.name;
        j["rho"] = m.rank;
        j["r"] = minimal_degree(m);
        j["alpha"] = json_of(primary);
        emit(j);
    });

    // asymptotic
    std::string asym_model, asym_q;
    Int asym_degree = 0, asym_stride = 1;
    auto* asym_cmd =
        app.add_subcommand("asymptotic", "exact versus predicted counting function values");
    asym_cmd->add_option("--model", asym_model, "model name or path")->required();
    asym_cmd->add_option("--q", asym_q, "rational q as p/r, q > 1")->required();
    asym_cmd->add_option("--degree", asym_degree, "largest degree d")->required();
    asym_cmd->add_option("--stride", asym_stride, "sample every stride degrees");
    asym_cmd->callback([&]() {
        FanoThreefoldModel m = resolve_model(asym_model);
        emit(to_json(convergence_report(m, Rational::from_string(asym_q), asym_degree,
                                        asym_stride)));
    });

    // monoid verify
    auto* monoid_cmd = app.add_subcommand("monoid", "presented monoid operations");
    monoid_cmd->require_subcommand(1);
    std::string monoid_model, monoid_file;
    Int monoid_degree = 30;
    auto* monoid_verify = monoid_cmd->add_subcommand(
        "verify", "check the presentation against the class map up to a degree");
    monoid_verify->add_option("--model", monoid_model, "model with a built-in presentation");
    monoid_verify->add_option("--presentation", monoid_file, "presentation JSON file");
    monoid_verify->add_option("--degree", monoid_degree, "degree bound");
    monoid_verify->callback([&]() {
        if (monoid_model.empty() == monoid_file.empty())
            throw input_error("monoid verify needs exactly one of --model or --presentation");
        PresentedCommutativeMonoid monoid =
            monoid_file.empty() ? builtin_monoid(monoid_model) : load_monoid_file(monoid_file);
        auto report = verify_presentation(monoid, monoid_degree, jobs);
        emit(to_json(report));
        if (!report.passed()) exit_code = 1;
    });

    // mbb {verify, decompose}
    auto* mbb_cmd = app.add_subcommand("mbb", "movable bend-and-break searches");
    mbb_cmd->require_subcommand(1);
    std::string mbbv_model;
    Int mbbv_degree = 40;
    auto* mbb_verify = mbb_cmd->add_subcommand("verify", "breaking sweep up to a degree bound");
    mbb_verify->add_option("--model", mbbv_model, "model name or path")->required();
    mbb_verify->add_option("--degree", mbbv_degree, "degree bound");
    mbb_verify->callback([&]() {
        auto report = verify_mbb(resolve_model(mbbv_model), mbbv_degree, jobs);
        emit(to_json(report));
        if (!report.violations.empty()) exit_code = 1;
    });
    std::string mbbd_model, mbbd_class;
    auto* mbb_decompose =
        mbb_cmd->add_subcommand("decompose", "all breakings of one nef curve class");
    mbb_decompose->add_option("--model", mbbd_model, "model name or path")->required();
    mbb_decompose->add_option("--class", mbbd_class, "curve class as comma-separated integers")
        ->required();
    mbb_decompose->callback([&]() {
        FanoThreefoldModel m = resolve_model(mbbd_model);
        LatticeVector cls = detail::parse_curve_class(mbbd_class, m.rank);
        Json j;
        j["model"] = m.name;
        j["class"] = json_of(cls);
        j["degree"] = m.degree_of(cls);
        Json frees = Json::array();
        for (const auto& b : free_breakings(m, cls)) frees.push_back(to_json(b));
        j["free_breakings"] = frees;
        Json chains = Json::array();
        for (const auto& b : e5_chain_breakings(m, cls)) chains.push_back(to_json(b));
        j["e5_chain_breakings"] = chains;
        emit(j);
    });

    // invariants {a, b}
    auto* inv_cmd = app.add_subcommand("invariants", "Fujita and b-invariants");
    inv_cmd->require_subcommand(1);
    std::string inva_model, inva_l;
    auto* inv_a = inv_cmd->add_subcommand("a", "Fujita invariant of a nef divisor class");
    inv_a->add_option("--model", inva_model, "model name or path")->required();
    inv_a->add_option("--L", inva_l, "divisor class as comma-separated integers")->required();
    inv_a->callback([&]() {
        FanoThreefoldModel m = resolve_model(inva_model);
        LatticeVector l = detail::parse_divisor_class(inva_l, m.rank);
        emit(invariant_to_json(m, l, a_invariant(m, l)));
    });
    std::string invb_model, invb_l;
    auto* inv_b = inv_cmd->add_subcommand("b", "dimension of the face killed by K + aL");
    inv_b->add_option("--model", invb_model, "model name or path")->required();
    inv_b->add_option("--L", invb_l, "divisor class as comma-separated integers")->required();
    inv_b->callback([&]() {
        FanoThreefoldModel m = resolve_model(invb_model);
        LatticeVector l = detail::parse_divisor_class(invb_l, m.rank);
        AInvariantResult a = a_invariant(m, l);
        Json j = invariant_to_json(m, l, a);
        j["b"] = b_invariant(m, l);
        emit(j);
    });

    // db {query, dump}
    auto* db_cmd = app.add_subcommand("db", "classification database");
    db_cmd->require_subcommand(1);
    std::vector<std::string> db_predicates;
    auto* db_query = db_cmd->add_subcommand("query", "records matching field=value predicates");
    db_query->add_option("predicates", db_predicates, "conjunctive field=value filters");
    db_query->callback([&]() {
        std::vector<std::pair<std::string, std::string>> predicates;
        for (const auto& p : db_predicates) {
            std::size_t eq = p.find('=');
            if (eq == std::string::npos)
                throw input_error("query predicate '" + p + "' is not of the form field=value");
            predicates.emplace_back(p.substr(0, eq), p.substr(eq + 1));
        }
        Json records = query_classification(predicates);
        Json j;
        j["count"] = records.size();
        j["records"] = records;
        emit(j);
    });
    auto* db_dump = db_cmd->add_subcommand("dump", "the embedded database, byte-exact");
    db_dump->callback([&]() { out << classification_db_text(); });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const manin::error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

} // namespace manin::cli
