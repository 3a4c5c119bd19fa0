#pragma once

#include <vector>

#include "edgeband/instance.hpp"

namespace edgeband {

// Relative slack applied to every constraint check, after normalizing the
// constraint by its natural scale.
inline constexpr double kFeasSlack = 1e-9;

// Uplink data-stream rate N * rho * F * q in bits/s.
// Throws std::domain_error when rho is outside [0, 1] or q <= 0.
double uplink_rate(double rho, double q, const SystemParams& params);

// Downlink model-stream rate M * b / T_total in bits/s.
// Throws std::domain_error when M is outside [0, M_max].
double downlink_rate(double m, const SystemParams& params);

// A full candidate allocation to check against the constraint system.
struct Candidate {
    double m = 0.0;    // transmitted model parameters
    double rho = 0.0;  // uploaded data proportion
    double q = 0.0;    // quantization level, must come from the instance set
    double t_u = 0.0;  // uplink time, s
    double t_d = 0.0;  // downlink time, s
};

enum class Constraint {
    RhoAndLevel,   // 7b: 0 <= rho <= 1 and q in the level set
    TimeBudget,    // 7c: T_u + T_d <= T_total
    UplinkRate,    // 7d: B*S_u*T_u/T_total >= N*rho*F*q
    DownlinkRate,  // 7e: B*S_d*T_d/T_total >= M*b/T_total
    ModelRange,    // 7f: 0 <= M <= M_max
};

const char* constraint_label(Constraint c);  // "7b" .. "7f"

struct Feasibility {
    bool feasible = false;
    std::vector<Constraint> violations;

    explicit operator bool() const { return feasible; }
};

// Checks every constraint and reports the violated ones. Any candidate is
// accepted for checking; infeasibility is a value, not an error.
Feasibility check_feasible(const Candidate& cand, const ProblemInstance& instance);

// Same checks and tolerances, no allocation. Hot-loop variant.
bool feasible_fast(const Candidate& cand, const ProblemInstance& instance);

}  // namespace edgeband
