#include "edgeband/solver.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "edgeband/model.hpp"
#include "edgeband/numeric.hpp"

namespace edgeband {

double objective(double m, const Envelope& envelope, const FusionModel& fusion) {
    EnvelopePoint p = envelope.evaluate(m);  // domain-checked there
    return fusion.value(m, p.value, envelope.model_params());
}

namespace {

AllocationResult degenerate_result(const ProblemInstance& instance) {
    AllocationResult r;
    r.m_opt = 0.0;
    r.m_opt_int = 0.0;
    r.q_opt = instance.levels.empty() ? 0.0 : instance.levels.front().q;
    r.rho_opt = 0.0;
    r.t_u_opt = instance.params.total_time_s;
    r.t_d_opt = 0.0;
    r.map_star_opt = instance.fusion.map_pre;
    r.map_opt = instance.fusion.map_pre;
    r.diagnostics.no_downlink = true;
    r.diagnostics.map_at_floor = instance.fusion.map_pre;
    r.diagnostics.map_at_ceil = instance.fusion.map_pre;
    return r;
}

}  // namespace

AllocationResult solve(const ProblemInstance& instance, const SolveOptions& options) {
    require_valid(instance);

    double dom = instance.params.domain_hi();
    if (!(dom > 0.0)) return degenerate_result(instance);

    Envelope env = build_envelope(instance, options.envelope);
    const FusionModel& fusion = instance.fusion;

    long evals = 0;
    auto obj = [&](double m) {
        ++evals;
        return fusion.value(m, env.evaluate(m).value, env.model_params());
    };

    // Candidate set: every knot plus a uniform grid per segment.
    int n = std::max(2, options.samples_per_segment);
    std::vector<double> candidates = env.knots();
    for (const auto& seg : env.segments()) {
        for (int i = 1; i + 1 < n; ++i) {
            double t = static_cast<double>(i) / static_cast<double>(n - 1);
            candidates.push_back(seg.m_lo + (seg.m_hi - seg.m_lo) * t);
        }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    double best_m = candidates.front();
    double best_v = obj(best_m);
    size_t best_i = 0;
    for (size_t i = 1; i < candidates.size(); ++i) {
        double v = obj(candidates[i]);
        if (v > best_v) {  // ties keep the earlier (smaller) M
            best_v = v;
            best_m = candidates[i];
            best_i = i;
        }
    }

    // Local refinement between the neighbors of the best sample.
    double lo = best_i > 0 ? candidates[best_i - 1] : candidates.front();
    double hi = best_i + 1 < candidates.size() ? candidates[best_i + 1] : candidates.back();
    if (hi > lo) {
        num::MaxPoint refined = num::golden_max(obj, lo, hi, options.refine_tol_rel * dom);
        if (refined.value > best_v) {
            best_v = refined.value;
            best_m = refined.x;
        }
    }

    EnvelopePoint at_best = env.evaluate(best_m);
    const SystemParams& p = instance.params;
    double t_d_raw = best_m * p.bits_per_param / (p.bandwidth_hz * p.downlink_efficiency);
    num::TimeSplit split = num::exact_time_split(p.total_time_s, t_d_raw);

    AllocationResult r;
    r.m_opt = best_m;
    r.m_opt_int = std::floor(best_m);
    r.q_opt = instance.levels[static_cast<size_t>(at_best.level)].q;
    r.rho_opt = at_best.rho;
    r.t_u_opt = split.t_u;
    r.t_d_opt = split.t_d;
    r.map_star_opt = at_best.value;
    r.map_opt = fusion.value(best_m, at_best.value, env.model_params());

    r.diagnostics.active_segment = env.segment_index(best_m);
    r.diagnostics.envelope_knots = env.knots();
    r.diagnostics.map_at_floor = obj(std::clamp(std::floor(best_m), 0.0, dom));
    r.diagnostics.map_at_ceil = obj(std::clamp(std::ceil(best_m), 0.0, dom));
    r.diagnostics.objective_evaluations = evals;
    return r;
}

}  // namespace edgeband
