#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "manin/cone.hpp"
#include "manin/enumerate.hpp"
#include "manin/errors.hpp"
#include "manin/lattice.hpp"
#include "manin/linalg.hpp"

namespace manin {

enum class EType { E1, E2, E3, E4, E5 };

inline std::string etype_name(EType t) {
    switch (t) {
        case EType::E1: return "E1";
        case EType::E2: return "E2";
        case EType::E3: return "E3";
        case EType::E4: return "E4";
        case EType::E5: return "E5";
    }
    return "?";
}

inline EType etype_from_name(const std::string& s) {
    if (s == "E1") return EType::E1;
    if (s == "E2") return EType::E2;
    if (s == "E3") return EType::E3;
    if (s == "E4") return EType::E4;
    if (s == "E5") return EType::E5;
    throw parse_error("unknown contraction type '" + s + "'");
}

// A divisor that can be contracted by a birational morphism. E5 divisors
// carry the class of a line in the exceptional plane: that line pairs to -2
// against the divisor and has anticanonical degree 1.
struct ContractibleDivisorRecord {
    std::string label;
    LatticeVector divisor_class;
    EType etype = EType::E1;
    std::set<std::string> flags;
    std::optional<LatticeVector> line_class;
};

enum class FibrationKind { DelPezzoFibration, ConicBundle, P1Bundle };

inline std::string fibration_kind_name(FibrationKind k) {
    switch (k) {
        case FibrationKind::DelPezzoFibration: return "del_pezzo_fibration";
        case FibrationKind::ConicBundle: return "conic_bundle";
        case FibrationKind::P1Bundle: return "p1_bundle";
    }
    return "?";
}

inline FibrationKind fibration_kind_from_name(const std::string& s) {
    if (s == "del_pezzo_fibration") return FibrationKind::DelPezzoFibration;
    if (s == "conic_bundle") return FibrationKind::ConicBundle;
    if (s == "p1_bundle") return FibrationKind::P1Bundle;
    throw parse_error("unknown fibration kind '" + s + "'");
}

struct FibrationRecord {
    std::string label;
    FibrationKind kind = FibrationKind::ConicBundle;
    int base_dimension = 2;
    std::vector<LatticeVector> contracted_face;
    LatticeVector pullback_divisor;
};

enum class ComponentRuleKind { UniquePerNefClass, ExplicitTable };

// How many counted components represent a given nef class.
struct ComponentCountRule {
    ComponentRuleKind kind = ComponentRuleKind::UniquePerNefClass;
    Int min_degree = 2;
    std::vector<std::pair<LatticeVector, Int>> table; // ExplicitTable only

    Int count_for(const LatticeVector& cls) const {
        if (kind == ComponentRuleKind::UniquePerNefClass) return 1;
        for (const auto& [c, n] : table)
            if (c == cls) return n;
        throw incomplete_rule_error("component table has no entry for class " + cls.str());
    }
};

struct LabeledClass {
    LatticeVector cls;
    std::string label;
};

// Metadata checks: a named linear combination of divisor symbols. Symbols
// are basis names, contractible divisor labels, or "-K".
struct DivisorCombo {
    std::vector<std::pair<Int, std::string>> terms;
};

struct DivisorIdentity {
    std::string label;
    DivisorCombo lhs, rhs;
};

// Expected signs (or exact values) of a divisor functional on named classes:
// entries are "+", "-", "0", or a decimal integer.
struct SignCheck {
    DivisorCombo functional;
    std::vector<std::pair<std::string, std::string>> expected;
};

// A relation between named curve classes that must hold as a vector identity.
struct RelationCheck {
    std::vector<std::pair<std::string, Int>> lhs, rhs;
};

struct ModelMetadata {
    std::optional<bool> has_a_cover_iitaka0;
    std::optional<bool> lattice_dual_pairing_assumed;
    std::optional<int> e5_threefold_index;
    std::vector<std::pair<std::string, LatticeVector>> named_curve_classes;
    std::vector<DivisorIdentity> divisor_identities;
    std::vector<SignCheck> sign_checks;
    std::vector<RelationCheck> relation_checks;
};

// Complete numerical package of a Fano threefold: lattices, cones,
// distinguished classes, and the component-count rule for the counting
// function.
struct FanoThreefoldModel {
    std::string name;
    int rank = 0;
    std::vector<std::string> divisor_basis;
    Pairing pairing;
    LatticeVector anticanonical;
    RationalPolyhedralCone pseff_divisor_cone;
    RationalPolyhedralCone nef_curve_cone;
    std::vector<ContractibleDivisorRecord> contractible_divisors;
    std::vector<FibrationRecord> fibrations;
    std::vector<LabeledClass> line_classes;
    std::vector<LabeledClass> conic_classes;
    ComponentCountRule component_rule;
    ModelMetadata metadata;

    Int degree_of(const LatticeVector& curve_class) const {
        return pair(anticanonical, curve_class, pairing);
    }

    bool is_nef(const LatticeVector& curve_class) const {
        return nef_curve_cone.contains(curve_class);
    }

    bool has_e5_divisor() const {
        for (const auto& d : contractible_divisors)
            if (d.etype == EType::E5) return true;
        return false;
    }

    std::optional<LatticeVector> named_class(const std::string& label) const {
        for (const auto& [n, c] : metadata.named_curve_classes)
            if (n == label) return c;
        return std::nullopt;
    }

    // Resolve a divisor symbol to its coordinate vector.
    LatticeVector resolve_divisor(const std::string& symbol) const {
        if (symbol == "-K") return anticanonical;
        for (int i = 0; i < rank; ++i) {
            if (divisor_basis[i] == symbol) {
                std::vector<Int> c(rank, 0);
                c[i] = 1;
                return LatticeVector(Space::Divisor, std::move(c));
            }
        }
        for (const auto& d : contractible_divisors)
            if (d.label == symbol) return d.divisor_class;
        throw model_error("unknown divisor symbol '" + symbol + "'");
    }

    LatticeVector eval_combo(const DivisorCombo& combo) const {
        LatticeVector acc(Space::Divisor, std::vector<Int>(rank, 0));
        for (const auto& [coeff, symbol] : combo.terms) acc = acc + coeff * resolve_divisor(symbol);
        return acc;
    }
};

// gcd of the anticanonical pairings with the curve-lattice basis: the least
// positive anticanonical degree of any integral curve class.
inline Int minimal_degree(const FanoThreefoldModel& m) {
    Int g = 0;
    for (int j = 0; j < m.rank; ++j) {
        std::vector<Int> e(m.rank, 0);
        e[j] = 1;
        g = gcd_int(g, pair(m.anticanonical, LatticeVector(Space::Curve, e), m.pairing));
    }
    if (g == 0) throw model_error("anticanonical functional is identically zero");
    return g;
}

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct ValidationReport {
    std::string model;
    std::vector<CheckResult> checks;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

inline void run_check(ValidationReport& report, const std::string& name, auto&& body) {
    CheckResult r;
    r.name = name;
    try {
        std::string detail = body();
        r.passed = detail.empty();
        r.detail = detail;
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = e.what();
    }
    report.checks.push_back(std::move(r));
}

} // namespace detail

// Re-derives every structural fact the model claims. Inconsistent data comes
// back as failed checks, never as an exception.
inline ValidationReport validate_model(const FanoThreefoldModel& m) {
    ValidationReport report;
    report.model = m.name;

    detail::run_check(report, "ranks consistent", [&]() -> std::string {
        if (m.rank <= 0) return "rank must be positive";
        if (m.pairing.rank != m.rank) return "pairing rank differs from model rank";
        if (static_cast<int>(m.divisor_basis.size()) != m.rank)
            return "divisor basis size differs from rank";
        if (m.anticanonical.rank() != m.rank || m.anticanonical.space != Space::Divisor)
            return "anticanonical class malformed";
        return "";
    });

    detail::run_check(report, "pairing nondegenerate", [&]() -> std::string {
        QMat q;
        for (const auto& row : m.pairing.matrix) q.push_back(to_qvec(row));
        if (determinant(std::move(q)).is_zero()) return "pairing matrix is singular";
        return "";
    });

    detail::run_check(report, "nef cone is the dual of the effective cone", [&]() -> std::string {
        auto dual = dual_cone(m.pseff_divisor_cone, m.pairing);
        if (!(dual.rays() == m.nef_curve_cone.rays()))
            return "stored nef rays differ from the computed dual";
        if (!(dual.facets() == m.nef_curve_cone.facets()))
            return "stored nef facets differ from the computed dual";
        return "";
    });

    detail::run_check(report, "anticanonical is positive on the nef cone", [&]() -> std::string {
        for (const auto& r : m.nef_curve_cone.rays())
            if (m.degree_of(r) <= 0) return "nef ray " + r.str() + " has nonpositive degree";
        return "";
    });

    detail::run_check(report, "line classes have degree one", [&]() -> std::string {
        for (const auto& [cls, label] : m.line_classes)
            if (m.degree_of(cls) != 1) return "line class '" + label + "' has wrong degree";
        return "";
    });

    detail::run_check(report, "conic classes have degree two", [&]() -> std::string {
        for (const auto& [cls, label] : m.conic_classes)
            if (m.degree_of(cls) != 2) return "conic class '" + label + "' has wrong degree";
        return "";
    });

    detail::run_check(report, "contractible divisors lie in the effective cone",
                      [&]() -> std::string {
                          for (const auto& d : m.contractible_divisors)
                              if (!m.pseff_divisor_cone.contains(d.divisor_class))
                                  return "divisor '" + d.label + "' is not pseudo-effective";
                          return "";
                      });

    detail::run_check(report, "E5 records carry a valid line class", [&]() -> std::string {
        for (const auto& d : m.contractible_divisors) {
            if (d.etype != EType::E5) continue;
            if (!d.line_class) return "E5 divisor '" + d.label + "' has no line class";
            if (pair(d.divisor_class, *d.line_class, m.pairing) != -2)
                return "E5 line of '" + d.label + "' does not pair to -2 with the divisor";
            if (m.degree_of(*d.line_class) != 1)
                return "E5 line of '" + d.label + "' does not have degree 1";
        }
        return "";
    });

    detail::run_check(report, "fibration faces are nef and contracted", [&]() -> std::string {
        for (const auto& f : m.fibrations) {
            if (f.base_dimension != 1 && f.base_dimension != 2)
                return "fibration '" + f.label + "' has bad base dimension";
            if (f.kind == FibrationKind::DelPezzoFibration && f.base_dimension != 1)
                return "del Pezzo fibration '" + f.label + "' must have a curve base";
            if (f.kind != FibrationKind::DelPezzoFibration && f.base_dimension != 2)
                return "fibration '" + f.label + "' must have a surface base";
            for (const auto& c : f.contracted_face) {
                if (!m.is_nef(c))
                    return "contracted class " + c.str() + " of '" + f.label + "' is not nef";
                if (pair(f.pullback_divisor, c, m.pairing) != 0)
                    return "contracted class " + c.str() + " of '" + f.label +
                           "' meets the pullback divisor";
            }
        }
        return "";
    });

    detail::run_check(report, "component rule is well-formed", [&]() -> std::string {
        if (m.component_rule.min_degree < 0) return "negative minimal degree";
        for (const auto& [cls, count] : m.component_rule.table) {
            if (count < 0) return "negative component count for " + cls.str();
            if (!m.is_nef(cls)) return "component table class " + cls.str() + " is not nef";
        }
        return "";
    });

    detail::run_check(report, "declared divisor identities hold", [&]() -> std::string {
        for (const auto& id : m.metadata.divisor_identities)
            if (!(m.eval_combo(id.lhs) == m.eval_combo(id.rhs)))
                return "identity '" + id.label + "' fails";
        return "";
    });

    detail::run_check(report, "declared sign profiles hold", [&]() -> std::string {
        for (const auto& sc : m.metadata.sign_checks) {
            LatticeVector functional = m.eval_combo(sc.functional);
            for (const auto& [label, expect] : sc.expected) {
                auto cls = m.named_class(label);
                if (!cls) return "sign check names unknown class '" + label + "'";
                Int v = pair(functional, *cls, m.pairing);
                bool ok = expect == "+"   ? v > 0
                          : expect == "-" ? v < 0
                          : expect == "0" ? v == 0
                                          : v == static_cast<Int>(std::stoll(expect));
                if (!ok)
                    return "sign check on '" + label + "' expected " + expect + ", got " +
                           std::to_string(v);
            }
        }
        return "";
    });

    detail::run_check(report, "declared class relations hold", [&]() -> std::string {
        auto eval = [&](const std::vector<std::pair<std::string, Int>>& side) {
            LatticeVector acc(Space::Curve, std::vector<Int>(m.rank, 0));
            for (const auto& [label, coeff] : side) {
                auto cls = m.named_class(label);
                if (!cls) throw model_error("relation names unknown class '" + label + "'");
                acc = acc + coeff * *cls;
            }
            return acc;
        };
        for (const auto& rel : m.metadata.relation_checks)
            if (!(eval(rel.lhs) == eval(rel.rhs))) return "a declared class relation fails";
        return "";
    });

    return report;
}

struct ClassReport {
    LatticeVector cls;
    Int degree = 0;
    bool nef = false;
    std::vector<int> facet_incidence; // indices of nef-cone facets containing the class
    std::vector<std::string> matched_lines;
    std::vector<std::string> matched_conics;
    std::vector<std::string> contracted_by; // fibration labels whose face spans the class
    bool fibration_contracted = false;
    bool good_class = false;
};

// Numerical profile of a curve class: degree, nef membership, facet
// incidences, matches against the distinguished classes, and the good-class
// test (nef, degree >= 3, not contracted by any fibration).
inline ClassReport classify_class(const FanoThreefoldModel& m, const LatticeVector& cls) {
    if (cls.space != Space::Curve || cls.rank() != m.rank)
        throw input_error("classify_class expects a curve class of the model's rank");
    ClassReport r;
    r.cls = cls;
    r.degree = m.degree_of(cls);
    r.nef = m.is_nef(cls);
    const auto& facets = m.nef_curve_cone.facets();
    for (std::size_t i = 0; i < facets.size(); ++i)
        if (pair(facets[i], cls, m.pairing) == 0) r.facet_incidence.push_back(static_cast<int>(i));
    for (const auto& [c, label] : m.line_classes)
        if (c == cls) r.matched_lines.push_back(label);
    for (const auto& [c, label] : m.conic_classes)
        if (c == cls) r.matched_conics.push_back(label);
    for (const auto& f : m.fibrations) {
        std::vector<std::vector<Int>> rows;
        for (const auto& c : f.contracted_face) rows.push_back(c.coords);
        int face_rank = integer_rank(rows);
        rows.push_back(cls.coords);
        if (integer_rank(rows) == face_rank) {
            r.contracted_by.push_back(f.label);
            r.fibration_contracted = true;
        }
    }
    r.good_class = r.nef && r.degree >= 3 && !r.fibration_contracted;
    return r;
}

} // namespace manin
