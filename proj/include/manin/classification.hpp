#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "manin/errors.hpp"
#include "manin/ints.hpp"
#include "manin/rational.hpp"

namespace manin {

// The classification data is a static table embedded in the binary; an
// identical copy ships as data/classification_db.json and the two are
// cross-checked byte-for-byte when the file copy is loaded.
inline const char* classification_db_text() {
    static const char* text = R"JSON({
  "contraction_types": [
    {
      "etype": "E1",
      "center": "curve",
      "exceptional_surface": "ruled surface over the blown-up curve",
      "anticanonical_restriction": "every fiber C of the contraction satisfies -K.C = 1"
    },
    {
      "etype": "E2",
      "center": "smooth_point",
      "exceptional_surface": "P2",
      "anticanonical_restriction": "(P2, O(2))"
    },
    {
      "etype": "E3",
      "center": "ordinary_double_point",
      "exceptional_surface": "smooth quadric surface Q",
      "anticanonical_restriction": "(Q, O(1,1))"
    },
    {
      "etype": "E4",
      "center": "cA2_point",
      "exceptional_surface": "quadric cone Q",
      "anticanonical_restriction": "(Q, O(1))"
    },
    {
      "etype": "E5",
      "center": "quotient_point",
      "exceptional_surface": "P2",
      "anticanonical_restriction": "(P2, O(1))"
    }
  ],
  "e5_threefolds": [
    {
      "index": 1,
      "description": "blow-up of P3 along a smooth plane cubic curve",
      "picard_rank": 2,
      "e5_contraction_count": 1
    },
    {
      "index": 2,
      "description": "P(O + O(2)) over P2",
      "picard_rank": 2,
      "e5_contraction_count": 1
    },
    {
      "index": 3,
      "description": "blow-up of P3 along the disjoint union of a plane cubic in a plane P and a point not on P",
      "picard_rank": 3,
      "e5_contraction_count": 1
    },
    {
      "index": 4,
      "description": "blow-up of P1 x P2 along a conic in a fiber of the first projection",
      "picard_rank": 3,
      "e5_contraction_count": 1
    },
    {
      "index": 5,
      "description": "blow-up of the blow-up of P3 at a point, along a line in the exceptional divisor",
      "picard_rank": 3,
      "e5_contraction_count": 1
    },
    {
      "index": 6,
      "description": "blow-up of P(O + O(2)) along a quartic curve in a minimal moving section",
      "picard_rank": 3,
      "e5_contraction_count": 2
    }
  ],
  "non_basepoint_free": [
    {
      "index": 1,
      "description": "V1: double cover of the Veronese cone W4 in P6 branched over a smooth intersection of W4 with a cubic hypersurface not through the vertex"
    },
    {
      "index": 2,
      "description": "blow-up of V1 along a smooth elliptic curve that is a complete intersection of two members of half the anticanonical system"
    },
    {
      "index": 3,
      "description": "P1 x S1 with S1 a del Pezzo surface of degree 1"
    }
  ],
  "singularity_rows": [
    { "table": "T1", "sing_type": "e3", "a": "1", "n": "1", "i": "1" },
    { "table": "T1", "sing_type": "e3", "a": "1", "n": "3", "i": "2" },
    { "table": "T1", "sing_type": "e3", "a": ">1", "cell": "***" },
    { "table": "T1", "sing_type": "e4", "a": "1", "cell": "not possible" },
    { "table": "T1", "sing_type": "e4", "a": ">1", "cell": "not possible" },
    { "table": "T1", "sing_type": "e5", "a": "1", "n": "1", "i": "2" },
    { "table": "T1", "sing_type": "e5", "a": "1", "n": "2", "i": "3" },
    { "table": "T1", "sing_type": "e5", "a": "2", "n": "1", "i": "1" },
    { "table": "T1", "sing_type": "e6", "a": "1", "i": "3" },
    { "table": "T1", "sing_type": "e6", "a": ">1", "cell": "not possible" },
    { "table": "T1", "sing_type": "e8", "a": "1", "n": "1", "i": "2" },
    { "table": "T1", "sing_type": "e8", "a": "1", "n": "3", "i": "4" },
    { "table": "T1", "sing_type": "e8", "a": ">1", "cell": "not possible" },
    { "table": "T1", "sing_type": "e9", "a": "1", "n": "1", "i": "3" },
    { "table": "T1", "sing_type": "e9", "a": "1", "n": "2", "i": "5" },
    { "table": "T1", "sing_type": "e9", "a": "2", "n": "1", "i": "3" },
    { "table": "T1", "sing_type": "e10", "a": "1", "i": "5" },
    { "table": "T1", "sing_type": "e10", "a": ">1", "cell": "not possible" },
    { "table": "T1", "sing_type": "e11", "a": "1", "cell": "not possible" },
    { "table": "T1", "sing_type": "e11", "a": "2", "n": "2", "i": "4" },
    { "table": "T1", "sing_type": "e12", "a": "1", "i": "4" },
    { "table": "T1", "sing_type": "e12", "a": ">1", "cell": "not possible" },
    { "table": "T1", "sing_type": "e14", "a": "1", "i": "3" },
    { "table": "T1", "sing_type": "e14", "a": ">1", "cell": "not possible" },
    { "table": "T1", "sing_type": "e15", "a": "1", "i": "4" },
    { "table": "T1", "sing_type": "e15", "a": ">1", "cell": "not possible" },
    { "table": "T1", "sing_type": "e16", "a": "1", "i": "6" },
    { "table": "T1", "sing_type": "e16", "a": ">1", "cell": "not possible" },
    { "table": "T2", "sing_type": "e1", "a": "1", "n": "1,2", "i": "1 or 2", "r_note": "r >= 4" },
    { "table": "T2", "sing_type": "e1", "a": "1", "n": "4", "i": "2" },
    { "table": "T2", "sing_type": "e1", "a": "2", "n": "1", "i": "1", "r_note": "r >= 9" },
    { "table": "T2", "sing_type": "e1", "a": "2", "n": "2", "i": "1 or 2", "r_note": "r >= 5" },
    { "table": "T2", "sing_type": "e1", "a": "4", "n": "1", "i": "1", "r_note": "r >= 17" },
    { "table": "T2", "sing_type": "e1", "a": "4", "n": "2", "i": "1 or 2", "r_note": "r >= 9" },
    { "table": "T2", "sing_type": "e2", "a": "1", "n": "1", "i": "1" },
    { "table": "T2", "sing_type": "e2", "a": "1", "n": "2", "i": "2" },
    { "table": "T2", "sing_type": "e2", "a": "2", "n": "1,2", "i": "1 or 2", "r_note": "r >= 4" },
    { "table": "T2", "sing_type": "e7", "a": "1", "n": "2", "i": "4" },
    { "table": "T2", "sing_type": "e13", "a": "1", "n": "1", "i": "2" },
    { "table": "T3", "sing_type": "e1", "r": 3, "a": "1", "n": "1", "d_witness": { "i": -1, "j": 0, "value": 3 }, "intersection_value": "4/3" },
    { "table": "T3", "sing_type": "e1", "r": 3, "a": "1", "n": "2", "d_witness": { "i": -1, "j": 0, "value": 2 }, "intersection_value": "2/3" },
    { "table": "T3", "sing_type": "e1", "r": 5, "a": "2", "n": "1", "d_witness": { "i": -1, "j": 0, "value": 3 }, "intersection_value": "8/5" },
    { "table": "T3", "sing_type": "e1", "r": 6, "a": "4", "n": "2", "d_witness": { "i": -1, "j": 0, "value": 3 }, "intersection_value": "4/3" },
    { "table": "T3", "sing_type": "e1", "r": 7, "a": "2", "n": "1", "d_witness": { "i": 0, "j": -3, "value": 3 }, "intersection_value": "12/7" },
    { "table": "T3", "sing_type": "e1", "r": 7, "a": "4", "n": "2", "d_witness": { "i": 0, "j": -3, "value": 3 }, "intersection_value": "12/7" },
    { "table": "T3", "sing_type": "e1", "r": 11, "a": "4", "n": "1", "d_witness": { "i": 0, "j": -5, "value": 3 }, "intersection_value": "20/11" },
    { "table": "T3", "sing_type": "e1", "r": 13, "a": "4", "n": "1", "d_witness": { "i": 0, "j": -6, "value": 3 }, "intersection_value": "24/13" }
  ],
  "prose_exclusions": [
    { "sing_type": "e2", "context": "r < 4", "cases": "(a,n) = (2,2)", "exclusion_note": "ruled out by Kawakita (2005), Lemma 3.3" },
    { "sing_type": "e2", "context": "r = 3, a = 2, n = 1", "witness": "d(0,-3) = 4", "value_note": "3 (a/n) E^3 = 2" },
    { "sing_type": "e1", "context": "r = 3", "cases": "(a,n) = (2,2), (4,1), (4,2)", "exclusion_note": "ruled out by Kawakita (2005), Lemma 3.3" },
    { "sing_type": "e1", "context": "r = 5", "cases": "(a,n) = (4,2)", "exclusion_note": "ruled out by Kawakita (2005), Lemma 3.3" },
    { "sing_type": "e1", "context": "(a,n) = (4,1)", "exclusion_note": "r must be congruent to 3 or 5 mod 8, by the erratum to Kawakita (2003)" },
    { "sing_type": "e1", "context": "r = 3", "cases": "(a,n) = (2,1)", "exclusion_note": "ruled out by Yamamoto (2018), Theorem 2.3" },
    { "sing_type": "e1", "context": "r = 5", "cases": "(a,n) = (4,1)", "exclusion_note": "ruled out by Yamamoto (2018), Theorems 2.1 and 2.2" }
  ],
  "model_links": [
    { "model": "quartic", "note": "Picard rank 1, no E5 contraction" },
    { "model": "p_o_o2", "e5_index": 2, "note": "unique E5 divisor: the rigid section" },
    { "model": "two_e5", "e5_index": 6, "note": "two E5 divisors: the strict transforms of the rigid and moving sections" }
  ],
  "data_notes": [
    {
      "id": "t2_heading_membership",
      "note": "the infinite-families table prints rows for e1, e2, e7, e13 while the surrounding text names e1, e2, e7, e11; rows are stored exactly as printed"
    }
  ]
}
)JSON";
    return text;
}

struct ContractionTypeRecord {
    std::string etype;
    std::string center;
    std::string exceptional_surface;
    std::string anticanonical_restriction;
};

struct E5ThreefoldRecord {
    int index = 0;
    std::string description;
    int picard_rank = 0;
    int e5_contraction_count = 0;
};

struct NonBasepointFreeRecord {
    int index = 0;
    std::string description;
};

struct DWitness {
    Int i = 0, j = 0, value = 0;
};

struct SingularityTableRow {
    std::string table; // "T1", "T2", "T3"
    std::string sing_type;
    std::optional<Int> r;
    std::optional<std::string> r_note;
    std::string a;
    std::optional<std::string> n;
    std::optional<std::string> i;
    std::optional<std::string> cell; // "not possible" or "***"
    std::optional<DWitness> d_witness;
    std::optional<Rational> intersection_value;
    std::optional<std::string> exclusion_note;
};

struct ProseExclusionRecord {
    std::string sing_type;
    std::string context;
    std::optional<std::string> cases;
    std::optional<std::string> witness;
    std::optional<std::string> value_note;
    std::optional<std::string> exclusion_note;
};

struct ModelLinkRecord {
    std::string model;
    std::optional<int> e5_index;
    std::string note;
};

struct DataNoteRecord {
    std::string id;
    std::string note;
};

class ClassificationDb {
public:
    std::vector<ContractionTypeRecord> contraction_types;
    std::vector<E5ThreefoldRecord> e5_threefolds;
    std::vector<NonBasepointFreeRecord> non_basepoint_free;
    std::vector<SingularityTableRow> singularity_rows;
    std::vector<ProseExclusionRecord> prose_exclusions;
    std::vector<ModelLinkRecord> model_links;
    std::vector<DataNoteRecord> data_notes;

    // raw records in source order, each annotated with its kind; this is the
    // query surface
    nlohmann::ordered_json flat_records;
};

namespace detail {

inline void check_db_keys(const nlohmann::ordered_json& obj, const std::string& what,
                          std::initializer_list<const char*> required,
                          std::initializer_list<const char*> optional) {
    for (const char* key : required)
        if (!obj.contains(key))
            throw parse_error("classification " + what + " is missing '" + key + "'");
    for (const auto& [key, value] : obj.items()) {
        bool known = false;
        for (const char* k : required) known |= key == k;
        for (const char* k : optional) known |= key == k;
        if (!known) throw parse_error("classification " + what + " has unknown field '" + key + "'");
    }
}

inline ClassificationDb parse_db(const nlohmann::ordered_json& j) {
    ClassificationDb db;
    check_db_keys(j, "database",
                  {"contraction_types", "e5_threefolds", "non_basepoint_free", "singularity_rows",
                   "prose_exclusions", "model_links", "data_notes"},
                  {});
    for (const auto& e : j["contraction_types"]) {
        check_db_keys(e, "contraction type",
                      {"etype", "center", "exceptional_surface", "anticanonical_restriction"}, {});
        db.contraction_types.push_back({e["etype"], e["center"], e["exceptional_surface"],
                                        e["anticanonical_restriction"]});
    }
    for (const auto& e : j["e5_threefolds"]) {
        check_db_keys(e, "E5 threefold", {"index", "description", "picard_rank",
                                          "e5_contraction_count"},
                      {});
        db.e5_threefolds.push_back(
            {e["index"], e["description"], e["picard_rank"], e["e5_contraction_count"]});
    }
    for (const auto& e : j["non_basepoint_free"]) {
        check_db_keys(e, "non-basepoint-free entry", {"index", "description"}, {});
        db.non_basepoint_free.push_back({e["index"], e["description"]});
    }
    for (const auto& e : j["singularity_rows"]) {
        check_db_keys(e, "singularity row", {"table", "sing_type", "a"},
                      {"r", "r_note", "n", "i", "cell", "d_witness", "intersection_value",
                       "exclusion_note"});
        SingularityTableRow row;
        row.table = e["table"];
        row.sing_type = e["sing_type"];
        row.a = e["a"];
        if (e.contains("r")) row.r = e["r"].get<Int>();
        if (e.contains("r_note")) row.r_note = e["r_note"].get<std::string>();
        if (e.contains("n")) row.n = e["n"].get<std::string>();
        if (e.contains("i")) row.i = e["i"].get<std::string>();
        if (e.contains("cell")) row.cell = e["cell"].get<std::string>();
        if (e.contains("d_witness")) {
            check_db_keys(e["d_witness"], "d-witness", {"i", "j", "value"}, {});
            row.d_witness = DWitness{e["d_witness"]["i"].get<Int>(), e["d_witness"]["j"].get<Int>(),
                                     e["d_witness"]["value"].get<Int>()};
        }
        if (e.contains("intersection_value"))
            row.intersection_value = Rational::from_string(e["intersection_value"].get<std::string>());
        if (e.contains("exclusion_note")) row.exclusion_note = e["exclusion_note"].get<std::string>();
        db.singularity_rows.push_back(std::move(row));
    }
    for (const auto& e : j["prose_exclusions"]) {
        check_db_keys(e, "prose exclusion", {"sing_type", "context"},
                      {"cases", "witness", "value_note", "exclusion_note"});
        ProseExclusionRecord rec;
        rec.sing_type = e["sing_type"];
        rec.context = e["context"];
        if (e.contains("cases")) rec.cases = e["cases"].get<std::string>();
        if (e.contains("witness")) rec.witness = e["witness"].get<std::string>();
        if (e.contains("value_note")) rec.value_note = e["value_note"].get<std::string>();
        if (e.contains("exclusion_note")) rec.exclusion_note = e["exclusion_note"].get<std::string>();
        db.prose_exclusions.push_back(std::move(rec));
    }
    for (const auto& e : j["model_links"]) {
        check_db_keys(e, "model link", {"model", "note"}, {"e5_index"});
        ModelLinkRecord rec;
        rec.model = e["model"];
        rec.note = e["note"];
        if (e.contains("e5_index")) rec.e5_index = e["e5_index"].get<int>();
        db.model_links.push_back(std::move(rec));
    }
    for (const auto& e : j["data_notes"]) {
        check_db_keys(e, "data note", {"id", "note"}, {});
        db.data_notes.push_back({e["id"], e["note"]});
    }

    // structural invariants of the classification
    if (db.contraction_types.size() != 5)
        throw table_inconsistency_error("expected exactly five contraction types");
    if (db.e5_threefolds.size() != 6)
        throw table_inconsistency_error("expected exactly six E5 threefolds");
    for (const auto& rec : db.e5_threefolds) {
        int expected = rec.index == 6 ? 2 : 1;
        if (rec.e5_contraction_count != expected)
            throw table_inconsistency_error("E5 contraction count wrong at index " +
                                            std::to_string(rec.index));
    }
    if (db.non_basepoint_free.size() != 3)
        throw table_inconsistency_error("expected exactly three non-basepoint-free threefolds");
    std::map<std::string, int> per_table;
    for (const auto& row : db.singularity_rows) ++per_table[row.table];
    if (per_table["T1"] != 28 || per_table["T2"] != 11 || per_table["T3"] != 8)
        throw table_inconsistency_error("singularity tables have missing or extra cells");

    // flat query surface in source order
    db.flat_records = nlohmann::ordered_json::array();
    auto add_all = [&](const char* kind, const nlohmann::ordered_json& arr) {
        for (const auto& e : arr) {
            nlohmann::ordered_json rec;
            rec["kind"] = kind;
            for (const auto& [k, v] : e.items()) rec[k] = v;
            db.flat_records.push_back(rec);
        }
    };
    add_all("contraction_type", j["contraction_types"]);
    add_all("e5_threefold", j["e5_threefolds"]);
    add_all("non_basepoint_free", j["non_basepoint_free"]);
    add_all("singularity_row", j["singularity_rows"]);
    add_all("prose_exclusion", j["prose_exclusions"]);
    add_all("model_link", j["model_links"]);
    add_all("data_note", j["data_notes"]);
    return db;
}

inline std::string scalar_to_string(const nlohmann::ordered_json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

} // namespace detail

inline const ClassificationDb& classification_db() {
    static const ClassificationDb db =
        detail::parse_db(nlohmann::ordered_json::parse(classification_db_text()));
    return db;
}

// Load the shipped copy, insisting that it is byte-identical to the embedded
// table; a drifted file is an error, not a fallback.
inline ClassificationDb load_classification_db_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open classification db file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (buffer.str() != classification_db_text())
        throw table_inconsistency_error("shipped classification db differs from the embedded table");
    return detail::parse_db(nlohmann::ordered_json::parse(buffer.str()));
}

// Conjunctive field query over all records. A record matches when it has
// every queried field with exactly the queried (stringified) value. A field
// name used by no record kind at all is a query error.
inline nlohmann::ordered_json query_classification(
    const std::vector<std::pair<std::string, std::string>>& predicates) {
    const auto& db = classification_db();
    for (const auto& [key, value] : predicates) {
        bool known = false;
        for (const auto& rec : db.flat_records) known |= rec.contains(key);
        if (!known) throw query_error("unknown query field '" + key + "'");
    }
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& rec : db.flat_records) {
        bool match = true;
        for (const auto& [key, value] : predicates) {
            if (!rec.contains(key) || detail::scalar_to_string(rec[key]) != value) {
                match = false;
                break;
            }
        }
        if (match) out.push_back(rec);
    }
    return out;
}

// Invert the section-degree relation of an exceptional divisor: sections of
// the d(i,j) witness are curves of anticanonical degree -(i a/n + j)(a/n) E^3,
// so E^3 is the recorded intersection value divided by that factor. Only
// rows carrying both a witness and an intersection value are eligible.
inline Rational derive_e_cubed(const SingularityTableRow& row) {
    if (!row.d_witness || !row.intersection_value)
        throw input_error("row has no d(i,j) witness with an intersection value");
    Int a = 0, n = 0;
    try {
        a = static_cast<Int>(std::stoll(row.a));
        n = static_cast<Int>(std::stoll(*row.n));
    } catch (...) {
        throw table_inconsistency_error("row has non-numeric a or n");
    }
    if (n == 0) throw table_inconsistency_error("row has n = 0");
    Rational discrepancy(a, n); // a/n
    Rational factor = -(rational_from_int(row.d_witness->i) * discrepancy +
                        rational_from_int(row.d_witness->j)) *
                      discrepancy;
    if (factor.is_zero()) throw table_inconsistency_error("degree factor vanishes; bad witness");
    Rational e_cubed = *row.intersection_value / factor;
    if (e_cubed.sign() <= 0)
        throw table_inconsistency_error("derived E^3 is not positive; inconsistent row");
    return e_cubed;
}

} // namespace manin
