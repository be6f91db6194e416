#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "manin/enumerate.hpp"
#include "manin/errors.hpp"
#include "manin/model.hpp"
#include "manin/parallel.hpp"

namespace manin {

// A numerical degeneration of a nef class: either a sum of two nef classes
// of degree >= 2 (the numerical shadow of a free-curve break), or two such
// classes joined by an E5 line.
struct Breaking {
    enum class Kind { FreePair, E5Chain };
    Kind kind = Kind::FreePair;
    LatticeVector beta, gamma;
    // E5Chain fields
    std::string line_label;
    LatticeVector line_class;
    // annotations for the E5 induction profile; reported, never filtered on
    bool parts_le_4 = false;
    bool e5_pairing_zero = false;
    bool degree_le_9 = false;
};

namespace detail {

inline void require_nef(const FanoThreefoldModel& m, const LatticeVector& cls) {
    if (cls.space != Space::Curve || cls.rank() != m.rank)
        throw input_error("expected a curve class of the model's rank");
    if (!m.is_nef(cls)) throw input_error("class " + cls.str() + " is not nef");
}

inline void assert_sum(const LatticeVector& total, const LatticeVector& sum) {
    if (!(total == sum)) throw error("breaking parts do not sum to the broken class");
}

// Unordered pairs {beta, gamma} of nef classes of degree >= 2 with
// beta + gamma = rest, canonically ordered by (degree, lex) of beta.
inline std::vector<std::pair<LatticeVector, LatticeVector>> nef_pair_sums(
    const FanoThreefoldModel& m, const LatticeVector& rest) {
    std::vector<std::pair<LatticeVector, LatticeVector>> out;
    Int total = m.degree_of(rest);
    if (total < 4) return out;
    for (const auto& beta : enumerate_lattice_points(m.nef_curve_cone, m.anticanonical, total - 2)) {
        Int db = m.degree_of(beta);
        if (db < 2) continue;
        if (2 * db > total) break; // points come degree-sorted; beta is the smaller part
        LatticeVector gamma = rest - beta;
        if (2 * db == total && gamma.coords < beta.coords) continue; // unordered pair, once
        if (!m.is_nef(gamma)) continue;
        out.emplace_back(beta, gamma);
    }
    return out;
}

} // namespace detail

// All splittings of a nef class into two nef classes of degree >= 2.
inline std::vector<Breaking> free_breakings(const FanoThreefoldModel& m,
                                            const LatticeVector& cls) {
    detail::require_nef(m, cls);
    std::vector<Breaking> out;
    for (auto& [beta, gamma] : detail::nef_pair_sums(m, cls)) {
        Breaking b;
        b.kind = Breaking::Kind::FreePair;
        b.beta = beta;
        b.gamma = gamma;
        detail::assert_sum(cls, b.beta + b.gamma);
        out.push_back(std::move(b));
    }
    return out;
}

// All splittings into two nef classes of degree >= 2 joined by an E5 line,
// over every E5 line class of the model. Models without an E5 divisor get an
// empty list.
inline std::vector<Breaking> e5_chain_breakings(const FanoThreefoldModel& m,
                                                const LatticeVector& cls) {
    detail::require_nef(m, cls);
    std::vector<Breaking> out;
    Int degree = m.degree_of(cls);
    for (const auto& divisor : m.contractible_divisors) {
        if (divisor.etype != EType::E5) continue;
        const LatticeVector& line = *divisor.line_class;
        LatticeVector rest = cls - line;
        for (auto& [beta, gamma] : detail::nef_pair_sums(m, rest)) {
            Breaking b;
            b.kind = Breaking::Kind::E5Chain;
            b.beta = beta;
            b.gamma = gamma;
            b.line_class = line;
            b.line_label = divisor.label;
            for (const auto& [lc, label] : m.line_classes)
                if (lc == line) b.line_label = label;
            b.parts_le_4 = m.degree_of(beta) <= 4 && m.degree_of(gamma) <= 4;
            b.e5_pairing_zero = pair(divisor.divisor_class, cls, m.pairing) == 0;
            b.degree_le_9 = degree <= 9;
            detail::assert_sum(cls, b.beta + b.line_class + b.gamma);
            out.push_back(std::move(b));
        }
    }
    return out;
}

// Degree from which every free family must break into two free curves:
// 5 without an E5 contraction, 6 with one.
inline Int mbb_threshold(const FanoThreefoldModel& m) { return m.has_e5_divisor() ? 5 + 1 : 5; }

struct MBBExceptionalClass {
    LatticeVector cls;
    std::vector<Breaking> chains;
};

struct MBBReport {
    std::string model;
    Int threshold = 0;
    Int d_max = 0;
    Int classes_checked = 0;
    std::vector<LatticeVector> violations;            // threshold classes with no free breaking
    std::vector<MBBExceptionalClass> degree5_exceptions; // degree-5 classes with no free breaking
};

// Sweep every nef class with threshold <= degree <= d_max and demand a free
// breaking; also record the degree-5 classes that only break through an E5
// chain. A violation would contradict the breaking theorem, so it signals
// wrong model data rather than new geometry.
inline MBBReport verify_mbb(const FanoThreefoldModel& m, Int d_max, int jobs = 1) {
    MBBReport report;
    report.model = m.name;
    report.threshold = mbb_threshold(m);
    report.d_max = d_max;
    if (d_max < report.threshold)
        throw input_error("verify_mbb needs d_max >= the breaking threshold " +
                          std::to_string(report.threshold));

    std::vector<LatticeVector> classes =
        enumerate_lattice_points(m.nef_curve_cone, m.anticanonical, d_max);

    struct Verdict {
        bool checked = false;
        bool violation = false;
        bool exceptional = false;
    };
    std::vector<Verdict> verdicts = parallel_map<Verdict>(
        classes.size(), jobs, [&](std::size_t i) {
            Verdict v;
            Int degree = m.degree_of(classes[i]);
            if (degree != 5 && degree < report.threshold) return v;
            bool has_free = !detail::nef_pair_sums(m, classes[i]).empty();
            if (degree >= report.threshold) {
                v.checked = true;
                v.violation = !has_free;
            }
            if (degree == 5 && !has_free) v.exceptional = true;
            return v;
        });

    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (verdicts[i].checked) ++report.classes_checked;
        if (verdicts[i].violation) report.violations.push_back(classes[i]);
        if (verdicts[i].exceptional)
            report.degree5_exceptions.push_back({classes[i], e5_chain_breakings(m, classes[i])});
    }
    return report;
}

} // namespace manin
