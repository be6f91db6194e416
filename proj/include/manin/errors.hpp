#pragma once

#include <stdexcept>
#include <string>

namespace manin {

// Base class for every error raised by the toolkit.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed arguments: rank/space mismatches, non-nef inputs, unknown fields, bad usage.
struct input_error : error {
    using error::error;
};

// Cone operations on non-pointed or lower-dimensional cones.
struct unsupported_cone_error : error {
    using error::error;
};

// Degree functional not strictly positive on a cone.
struct grading_error : error {
    using error::error;
};

// Hilbert-basis verification failed: the candidate degree bound missed a generator.
struct incompleteness_error : error {
    using error::error;
};

// Inconsistent or unusable model data.
struct model_error : error {
    using error::error;
};

// b-invariant requested where the a-invariant is infinite.
struct undefined_invariant_error : error {
    using error::error;
};

// Explicit component table is missing a class the counting range needs.
struct incomplete_rule_error : error {
    using error::error;
};

// Asymptotic prediction requested at q <= 1.
struct divergent_prediction_error : error {
    using error::error;
};

// A singularity-table row fails its own consistency relation.
struct table_inconsistency_error : error {
    using error::error;
};

// Unknown field name in a database query.
struct query_error : error {
    using error::error;
};

// Strict JSON parsing failures.
struct parse_error : error {
    using error::error;
};

// Checked 64-bit arithmetic overflowed; results are never silently wrapped.
struct arithmetic_overflow_error : error {
    using error::error;
};

} // namespace manin
