#include "edgeband/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "edgeband/numeric.hpp"

namespace edgeband {

OracleResult brute_force(const ProblemInstance& instance, const GridSpec& grid,
                         const TraceSink& trace) {
    require_valid(instance);
    if (grid.n_m < 2 || grid.n_rho < 2)
        throw std::invalid_argument("brute_force: grid needs n_m >= 2 and n_rho >= 2");
    long long total = static_cast<long long>(grid.n_m) * grid.n_rho *
                      static_cast<long long>(instance.levels.size());
    if (total > grid.budget_cap)
        throw BudgetExceeded("brute_force: " + std::to_string(total) + " tuples exceed cap " +
                             std::to_string(grid.budget_cap));

    const SystemParams& p = instance.params;
    double dom = std::max(p.domain_hi(), 0.0);
    double m_max = p.model_params;
    double pre = instance.fusion.map_pre;

    OracleResult result;
    result.best.map = -1.0;

    std::vector<double> rho_grid = num::linspace(0.0, 1.0, grid.n_rho);

    for (int im = 0; im < grid.n_m; ++im) {
        double t = static_cast<double>(im) / static_cast<double>(grid.n_m - 1);
        double m = im == 0 ? 0.0 : (im == grid.n_m - 1 ? dom : dom * t);
        double t_d = m * p.bits_per_param / (p.bandwidth_hz * p.downlink_efficiency);
        double t_u = p.total_time_s - t_d;

        // The blend factor only depends on m; hoist it out of the scan.
        enum class Mode { Pre, Star, Blend } mode;
        double factor = 0.0;
        if (m <= 0.0) {
            mode = Mode::Pre;
        } else if (m >= m_max) {
            mode = Mode::Star;
        } else {
            mode = Mode::Blend;
            factor = instance.fusion.phi(m / m_max);
        }

        for (size_t j = 0; j < instance.levels.size(); ++j) {
            const QuantLevelModel& level = instance.levels[j];
            Candidate cand{m, 0.0, level.q, t_u, t_d};
            for (double rho : rho_grid) {
                cand.rho = rho;
                ++result.visited;
                if (!feasible_fast(cand, instance)) break;  // rho only tightens
                ++result.feasible;
                double map_star = level.g(rho);
                double map = mode == Mode::Pre    ? pre
                             : mode == Mode::Star ? map_star
                                                  : pre + (map_star - pre) * factor;
                if (trace) {
                    trace({m, rho, level.q, static_cast<int>(j), t_u, t_d, map_star, map});
                }
                // Scan order (m, level, rho ascending) settles the m and
                // level ties; among f-ties at the same m (the blend factor
                // can round away mAP* differences), keep the candidate on
                // the boundary, i.e. the largest mAP*.
                const OracleCandidate& b = result.best;
                if (map > b.map || (map == b.map && m == b.m && map_star > b.map_star)) {
                    result.best = {m, rho, level.q, static_cast<int>(j), t_u, t_d, map_star, map};
                }
            }
        }
    }
    return result;
}

double grid_resolution_bound(const ProblemInstance& instance, const GridSpec& grid) {
    const SystemParams& p = instance.params;
    double dom = p.domain_hi();
    double step_m = dom / (grid.n_m - 1);
    double step_rho = 1.0 / (grid.n_rho - 1);

    constexpr int kProbe = 4096;
    double g_slope = 0.0;
    double cap_slope = 0.0;
    for (const auto& level : instance.levels) {
        double prev = level.g(0.0);
        for (int i = 1; i <= kProbe; ++i) {
            double r = static_cast<double>(i) / kProbe;
            double v = level.g(r);
            g_slope = std::max(g_slope, std::abs(v - prev) * kProbe);
            prev = v;
        }
        double demand = p.frame_rate * p.frame_params * level.q;
        cap_slope = std::max(cap_slope, p.uplink_efficiency * p.bits_per_param /
                                            (demand * p.total_time_s * p.downlink_efficiency));
    }
    double phi_slope = 0.0;
    double prev = instance.fusion.phi(0.0);
    for (int i = 1; i <= kProbe; ++i) {
        double u = static_cast<double>(i) / kProbe;
        double v = instance.fusion.phi(u);
        phi_slope = std::max(phi_slope, std::abs(v - prev) * kProbe);
        prev = v;
    }

    // |df| <= |d mAP*| + phi' * |du|, and mAP* moves through g along both
    // grid axes: d(rho_cap) = cap_slope * dM on the M axis, d(rho) on the
    // rho axis.
    return g_slope * (cap_slope * step_m + step_rho) + phi_slope * step_m / p.model_params +
           1e-12;
}

}  // namespace edgeband
