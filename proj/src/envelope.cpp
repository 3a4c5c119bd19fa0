#include "edgeband/envelope.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "edgeband/model.hpp"
#include "edgeband/numeric.hpp"

namespace edgeband {

double PerLevelBoundary::rho_cap(double m) const {
    return num::clamp01(cap0 - cap_slope * m);
}

double PerLevelBoundary::rho_opt(double m) const {
    return std::min(rho_best, rho_cap(m));
}

double PerLevelBoundary::value(double m) const {
    return g(rho_opt(m));
}

namespace {

void require_in_domain(double m, double domain_hi, const char* what) {
    double tol = kFeasSlack * std::max(domain_hi, 1.0);
    if (!(m >= -tol && m <= domain_hi + tol))
        throw std::domain_error(std::string(what) + ": M outside [0, domain_hi]");
}

}  // namespace

double rho_cap(double m, int level, const ProblemInstance& instance) {
    PerLevelBoundary b = per_level_boundary(level, instance);
    require_in_domain(m, b.domain_hi, "rho_cap");
    return b.rho_cap(std::clamp(m, 0.0, b.domain_hi));
}

PerLevelBoundary per_level_boundary(int level, const ProblemInstance& instance) {
    if (level < 0 || static_cast<size_t>(level) >= instance.levels.size())
        throw std::out_of_range("per_level_boundary: level index");
    const SystemParams& p = instance.params;
    const QuantLevelModel& lv = instance.levels[static_cast<size_t>(level)];

    PerLevelBoundary b;
    b.level = level;
    b.q = lv.q;
    b.g = lv.g;
    b.domain_hi = p.domain_hi();

    double demand = p.frame_rate * p.frame_params * lv.q;  // bits/s at rho = 1
    b.cap0 = p.uplink_efficiency * p.bandwidth_hz / demand;
    b.cap_slope = p.uplink_efficiency * p.bits_per_param /
                  (demand * p.total_time_s * p.downlink_efficiency);

    b.rho_best = lv.g.argmax();
    b.plateau = lv.g(b.rho_best);

    // Largest M whose leftover uplink time still carries rho_best; an empty
    // interval (uplink can't carry rho_best even with the whole cycle)
    // clamps to 0 and the concave tail covers the full domain.
    double threshold_raw = (p.total_time_s * p.downlink_efficiency / p.bits_per_param) *
                           (p.bandwidth_hz - b.rho_best * demand / p.uplink_efficiency);
    b.threshold = std::clamp(threshold_raw, 0.0, b.domain_hi);
    return b;
}

namespace {

// Bisect a sign change of diff on [lo, hi] down to width_tol.
double bisect_crossing(const std::function<double(double)>& diff, double lo, double hi,
                       double f_lo, double width_tol) {
    for (int it = 0; it < 200 && hi - lo > width_tol; ++it) {
        double mid = 0.5 * (lo + hi);
        double f_mid = diff(mid);
        if (f_mid == 0.0) return mid;
        if ((f_lo < 0.0) == (f_mid < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

Envelope::Envelope(std::vector<PerLevelBoundary> boundaries, std::vector<double> knots,
                   std::vector<EnvelopeSegment> segments, double m_max)
    : boundaries_(std::move(boundaries)),
      knots_(std::move(knots)),
      segments_(std::move(segments)),
      domain_hi_(knots_.empty() ? 0.0 : knots_.back()),
      m_max_(m_max) {}

EnvelopePoint Envelope::evaluate(double m) const {
    require_in_domain(m, domain_hi_, "Envelope::evaluate");
    m = std::clamp(m, 0.0, domain_hi_);
    EnvelopePoint best{-1.0, -1, 0.0};
    for (const auto& b : boundaries_) {
        double v = b.value(m);
        if (v > best.value) best = {v, b.level, b.rho_opt(m)};
    }
    return best;
}

int Envelope::segment_index(double m) const {
    require_in_domain(m, domain_hi_, "Envelope::segment_index");
    auto it = std::upper_bound(knots_.begin(), knots_.end(), m);
    int idx = static_cast<int>(it - knots_.begin()) - 1;
    return std::clamp(idx, 0, static_cast<int>(segments_.size()) - 1);
}

Envelope build_envelope(const ProblemInstance& instance, const EnvelopeOptions& options) {
    if (instance.levels.empty())
        throw InvalidInstance("build_envelope: instance has no quantization levels");
    double dom = instance.params.domain_hi();
    if (!(dom > 0.0)) throw DegenerateDomain("build_envelope: domain_hi <= 0");

    std::vector<PerLevelBoundary> bounds;
    bounds.reserve(instance.levels.size());
    for (size_t j = 0; j < instance.levels.size(); ++j)
        bounds.push_back(per_level_boundary(static_cast<int>(j), instance));

    std::vector<double> knots = {0.0, dom};
    for (const auto& b : bounds)
        if (b.threshold > 0.0 && b.threshold < dom) knots.push_back(b.threshold);

    // Pairwise crossings: scan for sign changes of the boundary difference,
    // then bisect. Crossings tighter than the scan grid can be missed; the
    // evaluator's pointwise max keeps values right regardless.
    double cross_tol = options.crossing_tol_rel * dom;
    std::vector<double> grid = num::linspace(0.0, dom, options.scan_points + 1);
    for (size_t j1 = 0; j1 + 1 < bounds.size(); ++j1) {
        for (size_t j2 = j1 + 1; j2 < bounds.size(); ++j2) {
            std::function<double(double)> diff = [&](double m) {
                return bounds[j1].value(m) - bounds[j2].value(m);
            };
            double prev = diff(grid[0]);
            for (size_t i = 1; i < grid.size(); ++i) {
                double cur = diff(grid[i]);
                if (prev == 0.0) {
                    knots.push_back(grid[i - 1]);
                } else if (cur != 0.0 && (prev < 0.0) != (cur < 0.0)) {
                    knots.push_back(bisect_crossing(diff, grid[i - 1], grid[i], prev, cross_tol));
                }
                prev = cur;
            }
        }
    }

    std::sort(knots.begin(), knots.end());
    std::vector<double> merged;
    merged.reserve(knots.size());
    double merge_tol = std::max(cross_tol, dom * 1e-15);
    for (double k : knots) {
        if (merged.empty() || k - merged.back() > merge_tol) merged.push_back(k);
    }
    merged.front() = 0.0;
    if (merged.size() < 2) merged.push_back(dom);
    merged.back() = dom;

    std::vector<EnvelopeSegment> segments;
    segments.reserve(merged.size() - 1);
    for (size_t i = 0; i + 1 < merged.size(); ++i) {
        double mid = 0.5 * (merged[i] + merged[i + 1]);
        int winner = 0;
        double best = -1.0;
        for (const auto& b : bounds) {
            double v = b.value(mid);
            if (v > best) {
                best = v;
                winner = b.level;
            }
        }
        SegmentKind kind = mid <= bounds[static_cast<size_t>(winner)].threshold
                               ? SegmentKind::Constant
                               : SegmentKind::ConcaveDecreasing;
        segments.push_back({merged[i], merged[i + 1], winner, kind});
    }

    return Envelope(std::move(bounds), std::move(merged), std::move(segments),
                    instance.params.model_params);
}

}  // namespace edgeband
