#pragma once

#include <string>
#include <vector>

#include "manin/enumerate.hpp"
#include "manin/errors.hpp"
#include "manin/model.hpp"
#include "manin/polytope.hpp"
#include "manin/rational.hpp"

namespace manin {

// Exact and predicted counting-function values with their ratios; all
// rationals, serialized as "num/den" strings.
struct CountingReport {
    std::string model;
    Rational q;
    Int d_max = 0;
    Int stride = 1;
    Int r = 1;
    Rational alpha;
    std::vector<std::pair<Int, Rational>> exact_values;
    std::vector<std::pair<Int, Rational>> predicted_values;
    std::vector<std::pair<Int, Rational>> ratios;
};

// N(X, -K_X, q, d): sum of C_alpha * q^(-K.alpha) over the nef integral
// classes with min_degree <= -K.alpha <= d * r(X, -K_X). Every counted
// component has the expected dimension -K.alpha, which is what turns the
// component count into this lattice sum.
inline Rational count_exact(const FanoThreefoldModel& m, const Rational& q, Int d) {
    if (q.sign() <= 0) throw input_error("count_exact needs q > 0");
    if (d < 1) throw input_error("count_exact needs d >= 1");
    Int r = minimal_degree(m);
    Int upper = checked_mul(d, r);
    if (upper < 1) return Rational(0);
    // group by degree so q^degree is computed once per degree
    std::vector<Int> multiplicity(static_cast<std::size_t>(upper) + 1, 0);
    for (const auto& cls : enumerate_lattice_points(m.nef_curve_cone, m.anticanonical, upper)) {
        Int degree = m.degree_of(cls);
        if (degree < m.component_rule.min_degree) continue;
        multiplicity[static_cast<std::size_t>(degree)] =
            checked_add(multiplicity[static_cast<std::size_t>(degree)],
                        m.component_rule.count_for(cls));
    }
    Rational total(0);
    for (Int degree = 1; degree <= upper; ++degree)
        if (multiplicity[static_cast<std::size_t>(degree)] != 0)
            total += rational_from_int(multiplicity[static_cast<std::size_t>(degree)]) *
                     q.pow(degree);
    return total;
}

// alpha(X, -K_X) = rho * Vol(nef cone cut at degree <= r), in the
// lattice-normalized measure. The slice is the convex hull of the origin and
// the rays rescaled to degree r, because the degree functional is linear and
// positive on the cone. `fan_root` rotates the vertex list so independent
// triangulations can be compared exactly.
inline Rational alpha_constant_from_vertex(const FanoThreefoldModel& m, std::size_t fan_root) {
    Int r = minimal_degree(m);
    std::vector<QVec> vertices;
    vertices.push_back(QVec(m.rank, Rational(0)));
    for (const auto& ray : m.nef_curve_cone.rays()) {
        Int deg = m.degree_of(ray);
        QVec v(m.rank);
        for (int c = 0; c < m.rank; ++c)
            v[c] = Rational(checked_mul(r, ray.coords[c]), deg);
        vertices.push_back(std::move(v));
    }
    std::rotate(vertices.begin(), vertices.begin() + (fan_root % vertices.size()), vertices.end());
    RationalPolytope slice;
    slice.space = Space::Curve;
    slice.vertices = std::move(vertices);
    return rational_from_int(m.rank) * polytope_volume(slice);
}

inline Rational alpha_constant(const FanoThreefoldModel& m) {
    return alpha_constant_from_vertex(m, 0);
}

// The predicted asymptotic value
//   q^(dim X - 3) * alpha / (1 - q^-r) * q^(d r) * d^(rho - 1)
// for threefolds, so the leading power is exactly q^(d r).
inline Rational predicted(const FanoThreefoldModel& m, const Rational& q, Int d) {
    if (!(q > Rational(1))) throw divergent_prediction_error("prediction needs q > 1");
    if (d < 1) throw input_error("predicted needs d >= 1");
    Int r = minimal_degree(m);
    Rational alpha = alpha_constant(m);
    Rational qr = q.pow(r);
    Rational geometric = qr / (qr - Rational(1)); // 1 / (1 - q^-r)
    return alpha * geometric * q.pow(checked_mul(d, r)) *
           rational_from_int(d).pow(m.rank - 1);
}

// Exact versus predicted values at d = stride, 2 stride, ..., d_max. Stride
// points whose degree range lies below min_degree are omitted.
inline CountingReport convergence_report(const FanoThreefoldModel& m, const Rational& q, Int d_max,
                                         Int stride) {
    if (!(q > Rational(1))) throw divergent_prediction_error("convergence report needs q > 1");
    if (stride < 1) throw input_error("stride must be positive");
    CountingReport report;
    report.model = m.name;
    report.q = q;
    report.d_max = d_max;
    report.stride = stride;
    report.r = minimal_degree(m);
    report.alpha = alpha_constant(m);

    // one enumeration pass; exact values are prefix sums over the degree histogram
    Int top = checked_mul(d_max < 0 ? 0 : d_max, report.r);
    std::vector<Int> multiplicity(static_cast<std::size_t>(top < 0 ? 0 : top) + 1, 0);
    if (top >= 1)
        for (const auto& cls : enumerate_lattice_points(m.nef_curve_cone, m.anticanonical, top)) {
            Int degree = m.degree_of(cls);
            if (degree < m.component_rule.min_degree) continue;
            multiplicity[static_cast<std::size_t>(degree)] =
                checked_add(multiplicity[static_cast<std::size_t>(degree)],
                            m.component_rule.count_for(cls));
        }
    std::vector<Rational> prefix(multiplicity.size(), Rational(0));
    for (std::size_t i = 1; i < multiplicity.size(); ++i) {
        prefix[i] = prefix[i - 1];
        if (multiplicity[i] != 0)
            prefix[i] += rational_from_int(multiplicity[i]) * q.pow(static_cast<Int>(i));
    }

    for (Int d = stride; d <= d_max; d += stride) {
        if (checked_mul(d, report.r) < m.component_rule.min_degree) continue;
        Rational exact = prefix[static_cast<std::size_t>(checked_mul(d, report.r))];
        Rational pred = predicted(m, q, d);
        report.exact_values.emplace_back(d, exact);
        report.predicted_values.emplace_back(d, pred);
        report.ratios.emplace_back(d, exact / pred);
    }
    return report;
}

// Polynomial-growth audit of the number of counted (class, component) pairs.
struct GrowthReport {
    std::string model;
    Int d_max = 0;
    std::vector<Int> counts; // counts[d] for d = 0..d_max (cumulative)
    Int fit_constant = 0;    // least integer c with counts[d] <= c * d^rank for all d >= 1
    std::vector<std::pair<Int, Rational>> doubling_ratios; // (d, counts[2d]/counts[d])
};

inline GrowthReport growth_bound_check(const FanoThreefoldModel& m, Int d_max) {
    GrowthReport report;
    report.model = m.name;
    report.d_max = d_max;
    report.counts.assign(static_cast<std::size_t>(d_max < 0 ? 0 : d_max) + 1, 0);
    if (d_max >= 1)
        for (const auto& cls : enumerate_lattice_points(m.nef_curve_cone, m.anticanonical, d_max)) {
            Int degree = m.degree_of(cls);
            if (degree < m.component_rule.min_degree) continue;
            report.counts[static_cast<std::size_t>(degree)] =
                checked_add(report.counts[static_cast<std::size_t>(degree)],
                            m.component_rule.count_for(cls));
        }
    for (std::size_t d = 1; d < report.counts.size(); ++d)
        report.counts[d] = checked_add(report.counts[d], report.counts[d - 1]);

    for (Int d = 1; d <= d_max; ++d) {
        // ceil(count / d^rank)
        Rational needed = rational_from_int(report.counts[static_cast<std::size_t>(d)]) /
                          rational_from_int(d).pow(m.rank);
        Int c = needed.ceil().to_int64();
        if (c > report.fit_constant) report.fit_constant = c;
    }
    for (Int d = 1; 2 * d <= d_max; ++d) {
        Int lo = report.counts[static_cast<std::size_t>(d)];
        if (lo == 0) continue;
        report.doubling_ratios.emplace_back(
            d, Rational(static_cast<long long>(report.counts[static_cast<std::size_t>(2 * d)]),
                        static_cast<long long>(lo)));
    }
    return report;
}

} // namespace manin
