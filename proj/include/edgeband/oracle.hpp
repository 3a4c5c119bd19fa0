#pragma once

#include <functional>

#include "edgeband/model.hpp"

namespace edgeband {

// Exhaustive-search comparator. Correctness reference only: enumerates a
// uniform (M, rho) grid for every quantization level, keeps the feasible
// candidates, and maximizes f(M, g(rho)) directly from the constraint
// system. Shares nothing with the envelope or solver paths.
struct GridSpec {
    int n_m = 101;                     // grid points over [0, domain_hi]
    int n_rho = 101;                   // grid points over [0, 1]
    long long budget_cap = 100000000;  // max n_m * n_rho * |levels|
};

struct OracleCandidate {
    double m = 0.0;
    double rho = 0.0;
    double q = 0.0;
    int level = 0;
    double t_u = 0.0;
    double t_d = 0.0;
    double map_star = 0.0;
    double map = 0.0;
};

struct OracleResult {
    OracleCandidate best;
    long long visited = 0;   // grid tuples considered
    long long feasible = 0;  // tuples that passed the constraint check
};

using TraceSink = std::function<void(const OracleCandidate&)>;

// Throws BudgetExceeded when the grid is larger than grid.budget_cap and
// InvalidInstance when validation fails. Ties broken toward smaller M, then
// larger mAP* (the reported candidate stays on the performance boundary even
// when the blend factor rounds f-differences away), then smaller level
// index, then smaller rho. `trace`, when set, receives every feasible
// candidate in scan order.
OracleResult brute_force(const ProblemInstance& instance, const GridSpec& grid,
                         const TraceSink& trace = nullptr);

// Numeric bound on how far the grid optimum can sit below the continuous
// optimum: sampled curve slopes times the grid steps. Conservative; meant as
// a comparison tolerance, not a sharp estimate.
double grid_resolution_bound(const ProblemInstance& instance, const GridSpec& grid);

}  // namespace edgeband
