#pragma once

#include <vector>

#include "edgeband/envelope.hpp"

namespace edgeband {

struct SolveOptions {
    int samples_per_segment = 512;
    double refine_tol_rel = 1e-6;  // golden-section bracket width / domain_hi
    EnvelopeOptions envelope;
};

struct SolveDiagnostics {
    int active_segment = -1;
    long objective_evaluations = 0;
    std::vector<double> envelope_knots;
    double map_at_floor = 0.0;  // objective at floor(M_opt)
    double map_at_ceil = 0.0;   // objective at ceil(M_opt), clamped to the domain
    bool no_downlink = false;   // degenerate domain: nothing can be transmitted
};

struct AllocationResult {
    double m_opt = 0.0;
    double m_opt_int = 0.0;  // floor(m_opt)
    double q_opt = 0.0;
    double rho_opt = 0.0;
    double t_u_opt = 0.0;
    double t_d_opt = 0.0;
    double map_star_opt = 0.0;  // L_M(m_opt), the edge update performance
    double map_opt = 0.0;       // f(m_opt, map_star_opt)
    SolveDiagnostics diagnostics;
};

// End-model performance reachable with M transmitted parameters when the
// upload side is run at its boundary optimum: f(M, L_M(M)).
// Throws std::domain_error when M is outside [0, domain_hi].
double objective(double m, const Envelope& envelope, const FusionModel& fusion);

// Full allocation pipeline: validate, build the envelope, maximize
// f(M, L_M(M)) over [0, domain_hi] by evaluating every knot, sampling each
// segment uniformly, and refining around the best sample with golden-section
// search, then recover (q, rho, T_u, T_d) from the winning level. The time
// budget is spent in full: T_d = M*b/(B*S_d), T_u = T_total - T_d, with the
// pair adjusted so the sum is exact in double arithmetic. Ties are resolved
// toward smaller M, then the smaller level index. Deterministic.
AllocationResult solve(const ProblemInstance& instance, const SolveOptions& options = {});

}  // namespace edgeband
