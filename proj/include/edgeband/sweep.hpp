#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edgeband/solver.hpp"

namespace edgeband {

enum class SweepParam { Bandwidth, FrameRate, TotalTime, ModelParams };

// "B", "N", "T_total", "M_max"
const char* sweep_param_name(SweepParam p);
std::optional<SweepParam> sweep_param_from_name(const std::string& name);

// Non-adaptive comparison policy: the same (rho, q, M) at every sweep point,
// clipped to what the channel admits there; reported as mAP_pre when even
// the clipped candidate is infeasible.
struct FixedStrategyBaseline {
    double rho_fix = 0.5;
    double q_fix = 0.0;  // must be one of the instance levels
    double m_fix = 0.0;
};

struct SweepSpec {
    SweepParam param = SweepParam::Bandwidth;
    std::vector<double> values;  // strictly increasing, strictly positive
    bool with_none_update = false;
    bool with_fixed = false;
    FixedStrategyBaseline fixed;
    SolveOptions solve_options;
};

struct SweepRow {
    double value = 0.0;
    std::string status;  // "ok" | "invalid" | "degenerate"
    double map_opt = 0.0;
    std::optional<double> map_none_update;
    std::optional<double> map_fixed;
    double m_opt = 0.0;
    double q_opt = 0.0;
    double rho_opt = 0.0;
    double t_u_opt = 0.0;
    double t_d_opt = 0.0;
    double uplink_bits = 0.0;    // B * S_u * T_u
    double downlink_bits = 0.0;  // B * S_d * T_d

    bool operator==(const SweepRow&) const = default;
};

struct SweepTable {
    std::string param;
    std::vector<std::string> columns;
    std::vector<SweepRow> rows;

    bool operator==(const SweepTable&) const = default;
};

// Re-solves the instance at every swept value and records one row per point.
// Per-point failures land in the row's status column; the sweep continues.
// Throws std::invalid_argument when the spec itself is malformed (empty or
// non-increasing values, fixed baseline outside the level set).
SweepTable run_sweep(const ProblemInstance& instance, const SweepSpec& spec);

double fixed_strategy_map(const ProblemInstance& instance, const FixedStrategyBaseline& fixed);

struct OverheadSplit {
    double uplink_fraction = 0.0;
    double downlink_fraction = 0.0;
    bool defined = false;  // false when both bit budgets are zero
};

OverheadSplit overhead_split(double uplink_bits, double downlink_bits);
OverheadSplit overhead_split(const SweepRow& row);

}  // namespace edgeband
