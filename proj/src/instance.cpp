#include "edgeband/instance.hpp"

#include <cmath>
#include <sstream>

#include "edgeband/numeric.hpp"

namespace edgeband {

const char* check_code_name(CheckCode code) {
    switch (code) {
        case CheckCode::NonpositiveParam: return "NonpositiveParam";
        case CheckCode::EmptyLevelSet: return "EmptyLevelSet";
        case CheckCode::DuplicateLevel: return "DuplicateLevel";
        case CheckCode::ConcavityViolation: return "ConcavityViolation";
        case CheckCode::MonotonicityViolation: return "MonotonicityViolation";
        case CheckCode::RangeViolation: return "RangeViolation";
        case CheckCode::TableInvalid: return "TableInvalid";
    }
    return "?";
}

std::string ValidationReport::to_string() const {
    std::ostringstream out;
    for (const auto& e : errors) out << "error: " << check_code_name(e.code) << ": " << e.message << "\n";
    for (const auto& w : warnings) out << "warning: " << w.message << "\n";
    if (errors.empty()) out << "instance valid (" << levels.size() << " levels)\n";
    return out.str();
}

namespace {

constexpr double kConcavityTol = 1e-9;
constexpr int kSampleTriples = 1001;

void check_positive(std::vector<ValidationIssue>& errors, double v, const char* name) {
    if (!(v > 0.0)) {
        errors.push_back({CheckCode::NonpositiveParam,
                          std::string(name) + " must be strictly positive, got " + num::fmt(v)});
    }
}

bool table_well_formed(const GCurve& g, int index, std::vector<ValidationIssue>& errors) {
    const auto& pts = g.points;
    std::string where = "level " + std::to_string(index) + " tabulated g: ";
    if (pts.size() < 2) {
        errors.push_back({CheckCode::TableInvalid, where + "needs at least 2 points"});
        return false;
    }
    for (size_t i = 1; i < pts.size(); ++i) {
        if (!(pts[i].first > pts[i - 1].first)) {
            errors.push_back({CheckCode::TableInvalid, where + "rho values must be strictly increasing"});
            return false;
        }
    }
    if (pts.front().first != 0.0 || pts.back().first != 1.0) {
        errors.push_back({CheckCode::TableInvalid, where + "rho must span [0, 1] exactly"});
        return false;
    }
    for (const auto& [r, v] : pts) {
        if (!(v >= 0.0 && v <= 1.0)) {
            errors.push_back({CheckCode::RangeViolation,
                              where + "value " + num::fmt(v) + " at rho=" + num::fmt(r) +
                                  " outside [0, 1]"});
            return false;
        }
    }
    return true;
}

void check_level_concavity(const QuantLevelModel& level, int index,
                           std::vector<ValidationIssue>& errors) {
    std::string where = "level " + std::to_string(index) + " (q=" + num::fmt(level.q) + "): ";
    if (level.g.family == GFamily::Tabulated) {
        if (!table_well_formed(level.g, index, errors)) return;
        const auto& pts = level.g.points;
        double prev_slope = 0.0;
        for (size_t i = 1; i < pts.size(); ++i) {
            double slope = (pts[i].second - pts[i - 1].second) / (pts[i].first - pts[i - 1].first);
            if (i > 1 && slope > prev_slope + kConcavityTol) {
                errors.push_back({CheckCode::ConcavityViolation,
                                  where + "slope increases from " + num::fmt(prev_slope) + " to " +
                                      num::fmt(slope) + " at rho=" + num::fmt(pts[i - 1].first)});
                return;
            }
            prev_slope = slope;
        }
        return;
    }
    // Parametric: midpoint test on consecutive sample triples.
    double h = 1.0 / (kSampleTriples + 1);
    double g0 = level.g(0.0);
    double g1 = level.g(h);
    for (int i = 0; i < kSampleTriples; ++i) {
        double x2 = (i + 2) * h;
        double g2 = level.g(x2);
        if (g1 < 0.5 * (g0 + g2) - kConcavityTol) {
            errors.push_back({CheckCode::ConcavityViolation,
                              where + "midpoint test fails near rho=" + num::fmt(x2 - h)});
            return;
        }
        g0 = g1;
        g1 = g2;
    }
    if (level.g.family == GFamily::Quadratic && level.g.d < 0.0) {
        errors.push_back({CheckCode::ConcavityViolation, where + "quadratic coefficient d < 0"});
    }
}

void check_phi(const PhiCurve& phi, std::vector<ValidationIssue>& errors) {
    if (phi.family == PhiFamily::Power && !(phi.gamma > 0.0)) {
        errors.push_back({CheckCode::NonpositiveParam, "phi power exponent gamma must be > 0"});
        return;
    }
    if (phi.family == PhiFamily::ExpSaturation && !(phi.k > 0.0)) {
        errors.push_back({CheckCode::NonpositiveParam, "phi exp_saturation rate k must be > 0"});
        return;
    }
    double prev = phi(0.0);
    for (int i = 1; i <= 1000; ++i) {
        double u = i / 1000.0;
        double v = phi(u);
        if (!(v > prev)) {
            errors.push_back({CheckCode::MonotonicityViolation,
                              "phi is non-increasing near u=" + num::fmt(u)});
            return;
        }
        prev = v;
    }
}

void check_g_params(const QuantLevelModel& level, int index, std::vector<ValidationIssue>& errors) {
    std::string where = "level " + std::to_string(index) + " g(" +
                        std::string(level.g.family_name()) + "): ";
    switch (level.g.family) {
        case GFamily::LogSaturation:
        case GFamily::ExpSaturation:
            if (!(level.g.k > 0.0))
                errors.push_back({CheckCode::NonpositiveParam, where + "rate k must be > 0"});
            break;
        case GFamily::Quadratic:
        case GFamily::Tabulated:
            break;
    }
}

}  // namespace

ValidationReport validate_instance(const ProblemInstance& instance) {
    ValidationReport report;
    auto& errors = report.errors;
    const SystemParams& p = instance.params;

    check_positive(errors, p.bandwidth_hz, "B");
    check_positive(errors, p.uplink_efficiency, "S_u");
    check_positive(errors, p.downlink_efficiency, "S_d");
    check_positive(errors, p.frame_rate, "N");
    check_positive(errors, p.frame_params, "F");
    check_positive(errors, p.total_time_s, "T_total");
    check_positive(errors, p.model_params, "M_max");
    check_positive(errors, p.bits_per_param, "b");
    if (p.bits_per_param > 0.0 &&
        (std::floor(p.bits_per_param) != p.bits_per_param || p.bits_per_param < 1.0)) {
        errors.push_back({CheckCode::NonpositiveParam,
                          "b must be an integer >= 1, got " + num::fmt(p.bits_per_param)});
    }

    if (instance.levels.empty()) {
        errors.push_back({CheckCode::EmptyLevelSet, "at least one quantization level is required"});
    }
    for (size_t i = 0; i < instance.levels.size(); ++i) {
        const auto& level = instance.levels[i];
        if (!(level.q > 0.0)) {
            errors.push_back({CheckCode::NonpositiveParam,
                              "level " + std::to_string(i) + " q must be strictly positive"});
        }
        for (size_t j = 0; j < i; ++j) {
            if (std::abs(level.q - instance.levels[j].q) <=
                1e-9 * std::max(level.q, instance.levels[j].q)) {
                errors.push_back({CheckCode::DuplicateLevel,
                                  "levels " + std::to_string(j) + " and " + std::to_string(i) +
                                      " share q=" + num::fmt(level.q)});
            }
        }
        size_t before = errors.size();
        check_g_params(level, static_cast<int>(i), errors);
        if (errors.size() == before && level.q > 0.0)
            check_level_concavity(level, static_cast<int>(i), errors);
    }

    if (!(instance.fusion.map_pre >= 0.0 && instance.fusion.map_pre <= 1.0)) {
        errors.push_back({CheckCode::RangeViolation,
                          "mAP_pre outside [0, 1]: " + num::fmt(instance.fusion.map_pre)});
    }
    check_phi(instance.fusion.phi, errors);

    if (!errors.empty()) return report;

    report.levels.reserve(instance.levels.size());
    for (size_t i = 0; i < instance.levels.size(); ++i) {
        double rho_best = instance.levels[i].g.argmax();
        double plateau = instance.levels[i].g(rho_best);
        report.levels.push_back({rho_best, plateau});
        if (plateau < instance.fusion.map_pre) {
            report.warnings.push_back(
                {CheckCode::RangeViolation,
                 "level " + std::to_string(i) + " peaks at " + num::fmt(plateau) +
                     ", below mAP_pre=" + num::fmt(instance.fusion.map_pre) +
                     "; updates through this level cannot help"});
        }
    }
    return report;
}

ValidationReport require_valid(const ProblemInstance& instance) {
    ValidationReport report = validate_instance(instance);
    if (!report.ok()) throw InvalidInstance(report.to_string());
    return report;
}

}  // namespace edgeband
