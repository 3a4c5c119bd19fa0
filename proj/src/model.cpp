#include "edgeband/model.hpp"

#include <cmath>
#include <stdexcept>

namespace edgeband {

double uplink_rate(double rho, double q, const SystemParams& params) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::domain_error("uplink_rate: rho outside [0, 1]");
    if (!(q > 0.0)) throw std::domain_error("uplink_rate: q must be positive");
    return params.frame_rate * rho * params.frame_params * q;
}

double downlink_rate(double m, const SystemParams& params) {
    if (!(m >= 0.0 && m <= params.model_params))
        throw std::domain_error("downlink_rate: M outside [0, M_max]");
    return m * params.bits_per_param / params.total_time_s;
}

namespace {

// lhs >= rhs up to the relative slack, normalized by the constraint scale.
inline bool holds_ge(double lhs, double rhs, double scale) {
    return lhs >= rhs - kFeasSlack * scale;
}

inline bool level_in_set(double q, const ProblemInstance& inst) {
    for (const auto& level : inst.levels) {
        if (std::abs(q - level.q) <= kFeasSlack * std::max(level.q, 1.0)) return true;
    }
    return false;
}

struct ConstraintEval {
    bool rho_and_level;
    bool time_budget;
    bool uplink;
    bool downlink;
    bool model_range;

    bool all() const { return rho_and_level && time_budget && uplink && downlink && model_range; }
};

inline ConstraintEval evaluate(const Candidate& c, const ProblemInstance& inst) {
    const SystemParams& p = inst.params;
    ConstraintEval e{};

    e.rho_and_level = c.rho >= -kFeasSlack && c.rho <= 1.0 + kFeasSlack && level_in_set(c.q, inst);
    e.time_budget = holds_ge(p.total_time_s, c.t_u + c.t_d, p.total_time_s);

    // Capacity scales keep the slack meaningful when the demand side is zero.
    double up_capacity = p.bandwidth_hz * p.uplink_efficiency;
    double up_lhs = up_capacity * (c.t_u / p.total_time_s);
    double up_rhs = p.frame_rate * c.rho * p.frame_params * c.q;
    e.uplink = holds_ge(up_lhs, up_rhs, std::max(up_capacity, up_rhs));

    double down_capacity = p.bandwidth_hz * p.downlink_efficiency;
    double down_lhs = down_capacity * (c.t_d / p.total_time_s);
    double down_rhs = c.m * p.bits_per_param / p.total_time_s;
    e.downlink = holds_ge(down_lhs, down_rhs, std::max(down_capacity, down_rhs));

    e.model_range = c.m >= -kFeasSlack * p.model_params && c.m <= p.model_params * (1.0 + kFeasSlack);
    return e;
}

}  // namespace

const char* constraint_label(Constraint c) {
    switch (c) {
        case Constraint::RhoAndLevel: return "7b";
        case Constraint::TimeBudget: return "7c";
        case Constraint::UplinkRate: return "7d";
        case Constraint::DownlinkRate: return "7e";
        case Constraint::ModelRange: return "7f";
    }
    return "?";
}

Feasibility check_feasible(const Candidate& cand, const ProblemInstance& instance) {
    ConstraintEval e = evaluate(cand, instance);
    Feasibility result;
    result.feasible = e.all();
    if (!e.rho_and_level) result.violations.push_back(Constraint::RhoAndLevel);
    if (!e.time_budget) result.violations.push_back(Constraint::TimeBudget);
    if (!e.uplink) result.violations.push_back(Constraint::UplinkRate);
    if (!e.downlink) result.violations.push_back(Constraint::DownlinkRate);
    if (!e.model_range) result.violations.push_back(Constraint::ModelRange);
    return result;
}

bool feasible_fast(const Candidate& cand, const ProblemInstance& instance) {
    return evaluate(cand, instance).all();
}

}  // namespace edgeband
