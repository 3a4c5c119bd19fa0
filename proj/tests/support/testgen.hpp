#pragma once

#include <random>

#include "edgeband/instance.hpp"
#include "edgeband/model.hpp"

namespace edgeband::testgen {

// Reference single-level setup used across the suites: B=1e6 Hz, S_u=S_d=1,
// N=10, F=1000, T_total=10 s, M_max=1e6, b=8, q=8 with
// g(rho)=0.5+0.3rho-0.1rho^2, phi=identity, mAP_pre=0.4.
ProblemInstance reference_instance();

// reference_instance plus a second level q=16, g(rho)=0.5+0.5rho-0.2rho^2,
// with M_max raised to 1.25e6 so the envelope tail is visible.
ProblemInstance two_level_instance();

struct GenOptions {
    int min_levels = 1;
    int max_levels = 4;
    double slope_cap = 1.6;   // bound on |g'| over [0, 1]
    double min_margin = 0.0;  // require max plateau >= mAP_pre + min_margin
    bool allow_tabulated = true;
    double phi_gamma_lo = 0.4;  // power family exponent range
    double phi_gamma_hi = 2.5;
    double phi_k_hi = 4.0;  // exp_saturation rate range top
    // When > 0, rescale F so that no level's uplink headroom S_u*B/(N*F*q)
    // exceeds this; keeps boundary slopes resolvable by finite-difference
    // continuity probes.
    double max_uplink_headroom = 0.0;
};

// Random instance with log-uniform scales (B over three decades) and concave
// in-range curves from every built-in family. Deterministic per rng state.
ProblemInstance random_instance(std::mt19937_64& rng, const GenOptions& options = {});

// Constraint-level oracle for a single level: best g over an n_rho-point
// uniform rho grid among candidates that pass check_feasible at this M, with
// T_d = M*b/(B*S_d) and T_u = T_total - T_d. Independent of the envelope
// closed forms.
double best_feasible_g(const ProblemInstance& instance, int level, double m, int n_rho);

}  // namespace edgeband::testgen
