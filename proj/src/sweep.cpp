#include "edgeband/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "edgeband/model.hpp"
#include "edgeband/numeric.hpp"

namespace edgeband {

const char* sweep_param_name(SweepParam p) {
    switch (p) {
        case SweepParam::Bandwidth: return "B";
        case SweepParam::FrameRate: return "N";
        case SweepParam::TotalTime: return "T_total";
        case SweepParam::ModelParams: return "M_max";
    }
    return "?";
}

std::optional<SweepParam> sweep_param_from_name(const std::string& name) {
    if (name == "B") return SweepParam::Bandwidth;
    if (name == "N") return SweepParam::FrameRate;
    if (name == "T_total") return SweepParam::TotalTime;
    if (name == "M_max") return SweepParam::ModelParams;
    return std::nullopt;
}

namespace {

void apply_param(ProblemInstance& instance, SweepParam param, double value) {
    switch (param) {
        case SweepParam::Bandwidth: instance.params.bandwidth_hz = value; break;
        case SweepParam::FrameRate: instance.params.frame_rate = value; break;
        case SweepParam::TotalTime: instance.params.total_time_s = value; break;
        case SweepParam::ModelParams: instance.params.model_params = value; break;
    }
}

int level_index_for_q(const ProblemInstance& instance, double q) {
    for (size_t j = 0; j < instance.levels.size(); ++j) {
        if (std::abs(instance.levels[j].q - q) <= 1e-9 * std::max(instance.levels[j].q, 1.0))
            return static_cast<int>(j);
    }
    return -1;
}

}  // namespace

double fixed_strategy_map(const ProblemInstance& instance, const FixedStrategyBaseline& fixed) {
    const SystemParams& p = instance.params;
    int j = level_index_for_q(instance, fixed.q_fix);
    if (j < 0) return instance.fusion.map_pre;
    double dom = p.domain_hi();
    if (!(dom > 0.0)) return instance.fusion.map_pre;

    // Clip the fixed policy to what the channel admits at this point.
    double m = std::clamp(fixed.m_fix, 0.0, dom);
    double t_d = m * p.bits_per_param / (p.bandwidth_hz * p.downlink_efficiency);
    double t_u = p.total_time_s - t_d;
    const QuantLevelModel& level = instance.levels[static_cast<size_t>(j)];
    double demand = p.frame_rate * p.frame_params * level.q;
    double cap = num::clamp01(p.uplink_efficiency * (p.bandwidth_hz - m * p.bits_per_param /
                                                     (p.total_time_s * p.downlink_efficiency)) /
                              demand);
    double rho = std::min(num::clamp01(fixed.rho_fix), cap);

    Candidate cand{m, rho, level.q, t_u, t_d};
    if (!feasible_fast(cand, instance)) return instance.fusion.map_pre;
    return instance.fusion.value(m, level.g(rho), p.model_params);
}

SweepTable run_sweep(const ProblemInstance& instance, const SweepSpec& spec) {
    if (spec.values.empty()) throw std::invalid_argument("run_sweep: no swept values");
    for (size_t i = 0; i < spec.values.size(); ++i) {
        if (!(spec.values[i] > 0.0))
            throw std::invalid_argument("run_sweep: swept values must be strictly positive");
        if (i > 0 && !(spec.values[i] > spec.values[i - 1]))
            throw std::invalid_argument("run_sweep: swept values must be strictly increasing");
    }
    if (spec.with_fixed && level_index_for_q(instance, spec.fixed.q_fix) < 0)
        throw std::invalid_argument("run_sweep: fixed baseline q is not in the level set");

    SweepTable table;
    table.param = sweep_param_name(spec.param);
    table.columns = {"param", "value", "status", "mAP_opt"};
    if (spec.with_none_update) table.columns.push_back("mAP_none_update");
    if (spec.with_fixed) table.columns.push_back("mAP_fixed");
    for (const char* c : {"M_opt", "q_opt", "rho_opt", "T_u_opt", "T_d_opt", "uplink_bits",
                          "downlink_bits"})
        table.columns.push_back(c);

    for (double value : spec.values) {
        ProblemInstance point = instance;
        apply_param(point, spec.param, value);

        SweepRow row;
        row.value = value;
        try {
            AllocationResult res = solve(point, spec.solve_options);
            row.status = res.diagnostics.no_downlink ? "degenerate" : "ok";
            row.map_opt = res.map_opt;
            row.m_opt = res.m_opt;
            row.q_opt = res.q_opt;
            row.rho_opt = res.rho_opt;
            row.t_u_opt = res.t_u_opt;
            row.t_d_opt = res.t_d_opt;
            const SystemParams& p = point.params;
            row.uplink_bits = p.bandwidth_hz * p.uplink_efficiency * res.t_u_opt;
            row.downlink_bits = p.bandwidth_hz * p.downlink_efficiency * res.t_d_opt;
            if (spec.with_none_update) row.map_none_update = point.fusion.map_pre;
            if (spec.with_fixed) row.map_fixed = fixed_strategy_map(point, spec.fixed);
        } catch (const InvalidInstance&) {
            row.status = "invalid";
            if (spec.with_none_update) row.map_none_update = 0.0;
            if (spec.with_fixed) row.map_fixed = 0.0;
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

OverheadSplit overhead_split(double uplink_bits, double downlink_bits) {
    double total = uplink_bits + downlink_bits;
    if (!(total > 0.0)) return {0.0, 0.0, false};
    return {uplink_bits / total, downlink_bits / total, true};
}

OverheadSplit overhead_split(const SweepRow& row) {
    return overhead_split(row.uplink_bits, row.downlink_bits);
}

}  // namespace edgeband
