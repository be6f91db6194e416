#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "manin/counting.hpp"
#include "manin/invariants.hpp"
#include "manin/mbb.hpp"
#include "manin/model.hpp"
#include "manin/monoid.hpp"

namespace manin {

using Json = nlohmann::ordered_json;

inline Json json_of(const Rational& r) { return r.str(); }

inline Json json_of(const LatticeVector& v) {
    Json arr = Json::array();
    for (Int c : v.coords) arr.push_back(c);
    return arr;
}

inline Json json_of(const Word& w) {
    Json arr = Json::array();
    for (Int c : w) arr.push_back(c);
    return arr;
}

inline Json to_json(const ValidationReport& report) {
    Json j;
    j["model"] = report.model;
    j["passed"] = report.all_passed();
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json jc;
        jc["name"] = c.name;
        jc["passed"] = c.passed;
        if (!c.detail.empty()) jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    return j;
}

inline Json to_json(const ClassReport& report) {
    Json j;
    j["class"] = json_of(report.cls);
    j["degree"] = report.degree;
    j["nef"] = report.nef;
    j["facet_incidence"] = report.facet_incidence;
    j["matched_lines"] = report.matched_lines;
    j["matched_conics"] = report.matched_conics;
    j["contracted_by"] = report.contracted_by;
    j["fibration_contracted"] = report.fibration_contracted;
    j["good_class"] = report.good_class;
    return j;
}

inline Json to_json(const CountingReport& report) {
    Json j;
    j["model"] = report.model;
    j["q"] = json_of(report.q);
    j["d_max"] = report.d_max;
    j["stride"] = report.stride;
    j["r"] = report.r;
    j["alpha"] = json_of(report.alpha);
    auto series = [](const std::vector<std::pair<Int, Rational>>& values) {
        Json arr = Json::array();
        for (const auto& [d, v] : values) arr.push_back(Json::array({d, json_of(v)}));
        return arr;
    };
    j["exact_values"] = series(report.exact_values);
    j["predicted"] = series(report.predicted_values);
    j["ratios"] = series(report.ratios);
    return j;
}

inline Json to_json(const GrowthReport& report) {
    Json j;
    j["model"] = report.model;
    j["d_max"] = report.d_max;
    Json counts = Json::array();
    for (Int d = 1; d < static_cast<Int>(report.counts.size()); ++d)
        counts.push_back(Json::array({d, report.counts[static_cast<std::size_t>(d)]}));
    j["counts"] = counts;
    j["fit_constant"] = report.fit_constant;
    Json doubling = Json::array();
    for (const auto& [d, ratio] : report.doubling_ratios)
        doubling.push_back(Json::array({d, json_of(ratio)}));
    j["doubling_ratios"] = doubling;
    return j;
}

inline Json invariant_to_json(const FanoThreefoldModel& m, const LatticeVector& l,
                              const AInvariantResult& result) {
    Json j;
    j["model"] = m.name;
    j["L"] = json_of(l);
    if (result.finite) {
        j["a"] = json_of(result.value);
        Json cert = Json::array();
        for (const auto& [ray_index, coeff] : result.certificate) {
            Json entry;
            entry["ray"] = json_of(m.pseff_divisor_cone.rays()[ray_index]);
            entry["coefficient"] = json_of(coeff);
            cert.push_back(entry);
        }
        j["certificate"] = cert;
    } else {
        j["a"] = "inf";
        j["witness"] = json_of(*result.witness);
    }
    return j;
}

inline Json to_json(const Breaking& b) {
    Json j;
    j["kind"] = b.kind == Breaking::Kind::FreePair ? "free_pair" : "e5_chain";
    j["beta"] = json_of(b.beta);
    if (b.kind == Breaking::Kind::E5Chain) {
        j["line"] = b.line_label;
        j["line_class"] = json_of(b.line_class);
    }
    j["gamma"] = json_of(b.gamma);
    if (b.kind == Breaking::Kind::E5Chain) {
        j["parts_le_4"] = b.parts_le_4;
        j["e5_pairing_zero"] = b.e5_pairing_zero;
        j["degree_le_9"] = b.degree_le_9;
    }
    return j;
}

inline Json to_json(const MBBReport& report) {
    Json j;
    j["model"] = report.model;
    j["threshold"] = report.threshold;
    j["d_max"] = report.d_max;
    j["classes_checked"] = report.classes_checked;
    Json violations = Json::array();
    for (const auto& v : report.violations) violations.push_back(json_of(v));
    j["violations"] = violations;
    Json exceptions = Json::array();
    for (const auto& e : report.degree5_exceptions) {
        Json je;
        je["class"] = json_of(e.cls);
        Json chains = Json::array();
        for (const auto& c : e.chains) chains.push_back(to_json(c));
        je["chain_breakings"] = chains;
        exceptions.push_back(je);
    }
    j["degree5_exceptions"] = exceptions;
    return j;
}

inline Json to_json(const PresentationReport& report) {
    Json j;
    j["monoid"] = report.monoid;
    j["d_max"] = report.d_max;
    j["words_checked"] = report.words_checked;
    j["classes_checked"] = report.classes_checked;
    j["soundness_walks"] = report.soundness_walks;
    j["soundness_ok"] = report.soundness_ok;
    Json violations = Json::array();
    for (const auto& v : report.violations) {
        Json jv;
        jv["class"] = json_of(v.cls);
        jv["degree"] = v.degree;
        jv["left"] = json_of(v.left);
        jv["right"] = json_of(v.right);
        violations.push_back(jv);
    }
    j["violations"] = violations;
    return j;
}

// --- output formats ------------------------------------------------------
// The JSON document is the ground truth; csv and table are flat renderings
// of the same leaf values, so every format carries identical rationals.

namespace detail {

inline std::string leaf_to_string(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

inline void flatten(const Json& j, const std::string& path,
                    std::vector<std::pair<std::string, std::string>>& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten(value, path.empty() ? key : path + "." + key, out);
    } else if (j.is_array()) {
        if (j.empty()) out.emplace_back(path, "[]");
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], path + "[" + std::to_string(i) + "]", out);
    } else {
        out.emplace_back(path, leaf_to_string(j));
    }
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + "\"";
}

} // namespace detail

inline std::string render_report(const Json& j, const std::string& format) {
    if (format == "json") return j.dump(2) + "\n";
    std::vector<std::pair<std::string, std::string>> rows;
    detail::flatten(j, "", rows);
    std::ostringstream out;
    if (format == "csv") {
        out << "field,value\n";
        for (const auto& [path, value] : rows)
            out << detail::csv_escape(path) << "," << detail::csv_escape(value) << "\n";
        return out.str();
    }
    if (format == "table") {
        std::size_t width = 0;
        for (const auto& [path, value] : rows) width = std::max(width, path.size());
        for (const auto& [path, value] : rows)
            out << std::left << std::setw(static_cast<int>(width) + 2) << path << value << "\n";
        return out.str();
    }
    throw input_error("unknown format '" + format + "' (expected json, csv, or table)");
}

} // namespace manin
