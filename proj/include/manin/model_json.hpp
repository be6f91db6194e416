#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include "json.hpp"

#include "manin/builtin_models.hpp"
#include "manin/model.hpp"
#include "manin/monoid.hpp"

namespace manin {

using Json = nlohmann::ordered_json;

namespace detail {

// Unknown fields are rejected outright: a typo in mathematical data must not
// be silently ignored.
inline void require_keys(const Json& obj, const std::string& what,
                         std::initializer_list<const char*> required,
                         std::initializer_list<const char*> optional) {
    if (!obj.is_object()) throw parse_error(what + " must be a JSON object");
    for (const char* key : required)
        if (!obj.contains(key)) throw parse_error(what + " is missing field '" + key + "'");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : required) known |= key == k;
        for (const char* k : optional) known |= key == k;
        if (!known) throw parse_error(what + " has unknown field '" + key + "'");
    }
}

inline std::vector<Int> int_vector(const Json& j, const std::string& what) {
    if (!j.is_array()) throw parse_error(what + " must be an integer array");
    std::vector<Int> v;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw parse_error(what + " must contain only integers");
        v.push_back(x.get<Int>());
    }
    return v;
}

inline LatticeVector vector_from_json(const Json& j, Space space, int rank,
                                      const std::string& what) {
    std::vector<Int> v = int_vector(j, what);
    if (static_cast<int>(v.size()) != rank) throw parse_error(what + " has the wrong rank");
    return LatticeVector(space, std::move(v));
}

inline Json vector_to_json(const LatticeVector& v) {
    Json j = Json::array();
    for (Int c : v.coords) j.push_back(c);
    return j;
}

inline DivisorCombo combo_from_json(const Json& j, const std::string& what) {
    DivisorCombo combo;
    if (!j.is_array()) throw parse_error(what + " must be an array of [coeff, symbol] pairs");
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() ||
            !term[1].is_string())
            throw parse_error(what + " terms must be [coeff, symbol] pairs");
        combo.terms.emplace_back(term[0].get<Int>(), term[1].get<std::string>());
    }
    return combo;
}

inline Json combo_to_json(const DivisorCombo& combo) {
    Json j = Json::array();
    for (const auto& [coeff, symbol] : combo.terms) j.push_back(Json::array({coeff, symbol}));
    return j;
}

} // namespace detail

inline Json model_to_json(const FanoThreefoldModel& m) {
    Json j;
    j["name"] = m.name;
    j["rank"] = m.rank;
    j["divisor_basis"] = m.divisor_basis;
    if (!m.pairing.is_identity()) {
        Json rows = Json::array();
        for (const auto& row : m.pairing.matrix) {
            Json r = Json::array();
            for (Int x : row) r.push_back(x);
            rows.push_back(r);
        }
        j["pairing"] = rows;
    }
    j["anticanonical"] = detail::vector_to_json(m.anticanonical);
    Json pseff = Json::array();
    for (const auto& r : m.pseff_divisor_cone.rays()) pseff.push_back(detail::vector_to_json(r));
    j["pseff_divisor_rays"] = pseff;
    Json nef = Json::array();
    for (const auto& r : m.nef_curve_cone.rays()) nef.push_back(detail::vector_to_json(r));
    j["nef_curve_rays"] = nef;

    Json divisors = Json::array();
    for (const auto& d : m.contractible_divisors) {
        Json jd;
        jd["label"] = d.label;
        jd["divisor_class"] = detail::vector_to_json(d.divisor_class);
        jd["etype"] = etype_name(d.etype);
        jd["flags"] = d.flags;
        if (d.line_class) jd["line_class"] = detail::vector_to_json(*d.line_class);
        divisors.push_back(jd);
    }
    j["contractible_divisors"] = divisors;

    Json fibrations = Json::array();
    for (const auto& f : m.fibrations) {
        Json jf;
        jf["label"] = f.label;
        jf["kind"] = fibration_kind_name(f.kind);
        jf["base_dimension"] = f.base_dimension;
        Json face = Json::array();
        for (const auto& c : f.contracted_face) face.push_back(detail::vector_to_json(c));
        jf["contracted_face"] = face;
        jf["pullback_divisor"] = detail::vector_to_json(f.pullback_divisor);
        fibrations.push_back(jf);
    }
    j["fibrations"] = fibrations;

    auto labeled = [](const std::vector<LabeledClass>& classes) {
        Json arr = Json::array();
        for (const auto& [cls, label] : classes) {
            Json e;
            e["class"] = detail::vector_to_json(cls);
            e["label"] = label;
            arr.push_back(e);
        }
        return arr;
    };
    j["line_classes"] = labeled(m.line_classes);
    j["conic_classes"] = labeled(m.conic_classes);

    Json rule;
    rule["kind"] = m.component_rule.kind == ComponentRuleKind::UniquePerNefClass
                       ? "unique_per_nef_class"
                       : "explicit_table";
    rule["min_degree"] = m.component_rule.min_degree;
    if (m.component_rule.kind == ComponentRuleKind::ExplicitTable) {
        Json table = Json::array();
        for (const auto& [cls, count] : m.component_rule.table)
            table.push_back(Json::array({detail::vector_to_json(cls), count}));
        rule["table"] = table;
    }
    j["component_rule"] = rule;

    Json meta;
    if (m.metadata.has_a_cover_iitaka0)
        meta["has_a_cover_iitaka0"] = *m.metadata.has_a_cover_iitaka0;
    if (m.metadata.lattice_dual_pairing_assumed)
        meta["lattice_dual_pairing_assumed"] = *m.metadata.lattice_dual_pairing_assumed;
    if (m.metadata.e5_threefold_index) meta["e5_threefold_index"] = *m.metadata.e5_threefold_index;
    if (!m.metadata.named_curve_classes.empty()) {
        Json named = Json::array();
        for (const auto& [label, cls] : m.metadata.named_curve_classes)
            named.push_back(Json::array({label, detail::vector_to_json(cls)}));
        meta["named_curve_classes"] = named;
    }
    if (!m.metadata.divisor_identities.empty()) {
        Json ids = Json::array();
        for (const auto& id : m.metadata.divisor_identities) {
            Json ji;
            ji["label"] = id.label;
            ji["lhs"] = detail::combo_to_json(id.lhs);
            ji["rhs"] = detail::combo_to_json(id.rhs);
            ids.push_back(ji);
        }
        meta["divisor_identities"] = ids;
    }
    if (!m.metadata.sign_checks.empty()) {
        Json scs = Json::array();
        for (const auto& sc : m.metadata.sign_checks) {
            Json js;
            js["functional"] = detail::combo_to_json(sc.functional);
            Json exp = Json::array();
            for (const auto& [label, value] : sc.expected)
                exp.push_back(Json::array({label, value}));
            js["expected"] = exp;
            scs.push_back(js);
        }
        meta["sign_checks"] = scs;
    }
    if (!m.metadata.relation_checks.empty()) {
        Json rels = Json::array();
        for (const auto& rel : m.metadata.relation_checks) {
            auto side = [](const std::vector<std::pair<std::string, Int>>& s) {
                Json arr = Json::array();
                for (const auto& [label, coeff] : s) arr.push_back(Json::array({label, coeff}));
                return arr;
            };
            Json jr;
            jr["lhs"] = side(rel.lhs);
            jr["rhs"] = side(rel.rhs);
            rels.push_back(jr);
        }
        meta["relation_checks"] = rels;
    }
    j["metadata"] = meta;
    return j;
}

inline FanoThreefoldModel model_from_json(const Json& j) {
    detail::require_keys(j, "model",
                         {"name", "rank", "divisor_basis", "anticanonical", "pseff_divisor_rays",
                          "contractible_divisors", "fibrations", "line_classes", "conic_classes",
                          "component_rule", "metadata"},
                         {"pairing", "nef_curve_rays"});
    FanoThreefoldModel m;
    m.name = j["name"].get<std::string>();
    m.rank = j["rank"].get<int>();
    if (m.rank <= 0) throw parse_error("model rank must be positive");
    m.divisor_basis = j["divisor_basis"].get<std::vector<std::string>>();
    if (static_cast<int>(m.divisor_basis.size()) != m.rank)
        throw parse_error("divisor basis size differs from rank");

    if (j.contains("pairing")) {
        m.pairing.rank = m.rank;
        for (const auto& row : j["pairing"])
            m.pairing.matrix.push_back(detail::int_vector(row, "pairing row"));
        if (static_cast<int>(m.pairing.matrix.size()) != m.rank)
            throw parse_error("pairing matrix has the wrong shape");
        for (const auto& row : m.pairing.matrix)
            if (static_cast<int>(row.size()) != m.rank)
                throw parse_error("pairing matrix has the wrong shape");
    } else {
        m.pairing = Pairing::identity(m.rank);
    }

    m.anticanonical =
        detail::vector_from_json(j["anticanonical"], Space::Divisor, m.rank, "anticanonical");

    std::vector<LatticeVector> pseff_rays;
    for (const auto& r : j["pseff_divisor_rays"])
        pseff_rays.push_back(
            detail::vector_from_json(r, Space::Divisor, m.rank, "pseudo-effective ray"));
    m.pseff_divisor_cone = RationalPolyhedralCone::from_rays(Space::Divisor, pseff_rays, m.pairing);
    m.nef_curve_cone = dual_cone(m.pseff_divisor_cone, m.pairing);
    if (j.contains("nef_curve_rays")) {
        std::vector<LatticeVector> given;
        for (const auto& r : j["nef_curve_rays"])
            given.push_back(detail::vector_from_json(r, Space::Curve, m.rank, "nef ray"));
        std::sort(given.begin(), given.end());
        if (!(given == m.nef_curve_cone.rays()))
            throw model_error("nef_curve_rays do not match the dual of the effective cone");
    }

    for (const auto& jd : j["contractible_divisors"]) {
        detail::require_keys(jd, "contractible divisor", {"label", "divisor_class", "etype", "flags"},
                             {"line_class"});
        ContractibleDivisorRecord d;
        d.label = jd["label"].get<std::string>();
        d.divisor_class =
            detail::vector_from_json(jd["divisor_class"], Space::Divisor, m.rank, "divisor class");
        d.etype = etype_from_name(jd["etype"].get<std::string>());
        for (const auto& f : jd["flags"]) d.flags.insert(f.get<std::string>());
        if (jd.contains("line_class"))
            d.line_class =
                detail::vector_from_json(jd["line_class"], Space::Curve, m.rank, "line class");
        if (d.etype == EType::E5 && !d.line_class)
            throw model_error("E5 divisor '" + d.label + "' needs a line class");
        m.contractible_divisors.push_back(std::move(d));
    }

    for (const auto& jf : j["fibrations"]) {
        detail::require_keys(jf, "fibration",
                             {"label", "kind", "base_dimension", "contracted_face",
                              "pullback_divisor"},
                             {});
        FibrationRecord f;
        f.label = jf["label"].get<std::string>();
        f.kind = fibration_kind_from_name(jf["kind"].get<std::string>());
        f.base_dimension = jf["base_dimension"].get<int>();
        for (const auto& c : jf["contracted_face"])
            f.contracted_face.push_back(
                detail::vector_from_json(c, Space::Curve, m.rank, "contracted class"));
        f.pullback_divisor = detail::vector_from_json(jf["pullback_divisor"], Space::Divisor,
                                                      m.rank, "pullback divisor");
        m.fibrations.push_back(std::move(f));
    }

    auto parse_labeled = [&](const Json& arr, const std::string& what) {
        std::vector<LabeledClass> out;
        for (const auto& e : arr) {
            detail::require_keys(e, what, {"class", "label"}, {});
            out.push_back({detail::vector_from_json(e["class"], Space::Curve, m.rank, what),
                           e["label"].get<std::string>()});
        }
        return out;
    };
    m.line_classes = parse_labeled(j["line_classes"], "line class");
    m.conic_classes = parse_labeled(j["conic_classes"], "conic class");

    const Json& rule = j["component_rule"];
    detail::require_keys(rule, "component rule", {"kind", "min_degree"}, {"table"});
    std::string kind = rule["kind"].get<std::string>();
    if (kind == "unique_per_nef_class")
        m.component_rule.kind = ComponentRuleKind::UniquePerNefClass;
    else if (kind == "explicit_table")
        m.component_rule.kind = ComponentRuleKind::ExplicitTable;
    else
        throw parse_error("unknown component rule kind '" + kind + "'");
    m.component_rule.min_degree = rule["min_degree"].get<Int>();
    if (rule.contains("table")) {
        for (const auto& entry : rule["table"]) {
            if (!entry.is_array() || entry.size() != 2)
                throw parse_error("component table entries must be [class, count] pairs");
            m.component_rule.table.emplace_back(
                detail::vector_from_json(entry[0], Space::Curve, m.rank, "component table class"),
                entry[1].get<Int>());
        }
    }

    const Json& meta = j["metadata"];
    detail::require_keys(meta, "metadata", {},
                         {"has_a_cover_iitaka0", "lattice_dual_pairing_assumed",
                          "e5_threefold_index", "named_curve_classes", "divisor_identities",
                          "sign_checks", "relation_checks"});
    if (meta.contains("has_a_cover_iitaka0"))
        m.metadata.has_a_cover_iitaka0 = meta["has_a_cover_iitaka0"].get<bool>();
    if (meta.contains("lattice_dual_pairing_assumed"))
        m.metadata.lattice_dual_pairing_assumed = meta["lattice_dual_pairing_assumed"].get<bool>();
    if (meta.contains("e5_threefold_index"))
        m.metadata.e5_threefold_index = meta["e5_threefold_index"].get<int>();
    if (meta.contains("named_curve_classes"))
        for (const auto& e : meta["named_curve_classes"])
            m.metadata.named_curve_classes.emplace_back(
                e[0].get<std::string>(),
                detail::vector_from_json(e[1], Space::Curve, m.rank, "named class"));
    if (meta.contains("divisor_identities"))
        for (const auto& e : meta["divisor_identities"]) {
            detail::require_keys(e, "divisor identity", {"label", "lhs", "rhs"}, {});
            m.metadata.divisor_identities.push_back(
                {e["label"].get<std::string>(), detail::combo_from_json(e["lhs"], "identity lhs"),
                 detail::combo_from_json(e["rhs"], "identity rhs")});
        }
    if (meta.contains("sign_checks"))
        for (const auto& e : meta["sign_checks"]) {
            detail::require_keys(e, "sign check", {"functional", "expected"}, {});
            SignCheck sc;
            sc.functional = detail::combo_from_json(e["functional"], "sign functional");
            for (const auto& pair : e["expected"])
                sc.expected.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
            m.metadata.sign_checks.push_back(std::move(sc));
        }
    if (meta.contains("relation_checks"))
        for (const auto& e : meta["relation_checks"]) {
            detail::require_keys(e, "relation check", {"lhs", "rhs"}, {});
            RelationCheck rel;
            for (const auto& t : e["lhs"]) rel.lhs.emplace_back(t[0].get<std::string>(), t[1].get<Int>());
            for (const auto& t : e["rhs"]) rel.rhs.emplace_back(t[0].get<std::string>(), t[1].get<Int>());
            m.metadata.relation_checks.push_back(std::move(rel));
        }
    return m;
}

inline Json monoid_to_json(const PresentedCommutativeMonoid& m) {
    Json j;
    j["name"] = m.name();
    j["generators"] = m.generator_labels();
    Json degrees = Json::array();
    for (Int d : m.degrees()) degrees.push_back(d);
    j["degrees"] = degrees;
    Json relations = Json::array();
    for (const auto& [lhs, rhs] : m.relations()) {
        Json jr;
        Json l = Json::array(), r = Json::array();
        for (Int x : lhs) l.push_back(x);
        for (Int x : rhs) r.push_back(x);
        jr["lhs"] = l;
        jr["rhs"] = r;
        relations.push_back(jr);
    }
    j["relations"] = relations;
    Json class_map = Json::array();
    for (const auto& cls : m.generator_classes()) class_map.push_back(detail::vector_to_json(cls));
    j["class_map"] = class_map;
    return j;
}

inline PresentedCommutativeMonoid monoid_from_json(const Json& j) {
    detail::require_keys(j, "monoid presentation",
                         {"name", "generators", "degrees", "relations", "class_map"}, {});
    std::vector<std::string> labels = j["generators"].get<std::vector<std::string>>();
    std::vector<Int> degrees = detail::int_vector(j["degrees"], "degrees");
    std::vector<std::pair<Word, Word>> relations;
    for (const auto& r : j["relations"]) {
        detail::require_keys(r, "relation", {"lhs", "rhs"}, {});
        relations.emplace_back(detail::int_vector(r["lhs"], "relation lhs"),
                               detail::int_vector(r["rhs"], "relation rhs"));
    }
    std::vector<LatticeVector> classes;
    int rank = -1;
    for (const auto& row : j["class_map"]) {
        std::vector<Int> v = detail::int_vector(row, "class map row");
        if (rank < 0) rank = static_cast<int>(v.size());
        classes.emplace_back(Space::Curve, std::move(v));
    }
    return PresentedCommutativeMonoid::create(j["name"].get<std::string>(), std::move(labels),
                                              std::move(degrees), std::move(relations),
                                              std::move(classes));
}

inline Json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const nlohmann::json::parse_error& e) {
        throw parse_error("invalid JSON in '" + path + "': " + e.what());
    }
}

inline FanoThreefoldModel load_model_file(const std::string& path) {
    return model_from_json(parse_json_file(path));
}

inline PresentedCommutativeMonoid load_monoid_file(const std::string& path) {
    return monoid_from_json(parse_json_file(path));
}

// Model lookup for the command line: explicit paths load directly, bare
// names search MANIN_MODEL_PATH, then ./models, then the built-ins.
inline FanoThreefoldModel resolve_model(const std::string& spec) {
    namespace fs = std::filesystem;
    if (spec.find('/') != std::string::npos || spec.ends_with(".json"))
        return load_model_file(spec);
    std::vector<std::string> dirs;
    if (const char* env = std::getenv("MANIN_MODEL_PATH")) {
        std::string paths(env);
        std::size_t start = 0;
        while (start <= paths.size()) {
            std::size_t colon = paths.find(':', start);
            std::string dir = paths.substr(start, colon == std::string::npos ? std::string::npos
                                                                             : colon - start);
            if (!dir.empty()) dirs.push_back(dir);
            if (colon == std::string::npos) break;
            start = colon + 1;
        }
    }
    dirs.push_back("models");
    for (const auto& dir : dirs) {
        fs::path candidate = fs::path(dir) / (spec + ".json");
        if (fs::exists(candidate)) return load_model_file(candidate.string());
    }
    return builtin_model(spec);
}

} // namespace manin
