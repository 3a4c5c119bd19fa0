#pragma once

#include <string>
#include <vector>

#include "edgeband/curves.hpp"
#include "edgeband/types.hpp"

namespace edgeband {

// One quantization level q from the discrete set, paired with its concave
// upload-performance curve.
struct QuantLevelModel {
    double q = 0.0;  // bits per uploaded parameter
    GCurve g;
};

struct ProblemInstance {
    SystemParams params;
    std::vector<QuantLevelModel> levels;
    FusionModel fusion;
};

enum class CheckCode {
    NonpositiveParam,
    EmptyLevelSet,
    DuplicateLevel,
    ConcavityViolation,
    MonotonicityViolation,
    RangeViolation,
    TableInvalid,
};

const char* check_code_name(CheckCode code);

struct ValidationIssue {
    CheckCode code;
    std::string message;
};

// Per-level annotation produced by validation: argmax of g and its value.
struct LevelAnnotation {
    double rho_best = 0.0;
    double plateau = 0.0;
};

struct ValidationReport {
    std::vector<ValidationIssue> errors;
    std::vector<ValidationIssue> warnings;
    std::vector<LevelAnnotation> levels;  // filled when errors is empty

    bool ok() const { return errors.empty(); }
    std::string to_string() const;
};

// Structural validation: positive parameters, integral b, distinct positive
// quantization levels, concave g curves (second differences for tables,
// 1001 sampled midpoint triples for parametric families), strictly
// increasing phi, in-range values. Emits a warning when some level's best
// achievable update performance falls below mAP_pre.
ValidationReport validate_instance(const ProblemInstance& instance);

// validate + throw InvalidInstance on errors; returns the report otherwise.
ValidationReport require_valid(const ProblemInstance& instance);

}  // namespace edgeband
