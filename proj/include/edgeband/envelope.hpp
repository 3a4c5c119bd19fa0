#pragma once

#include <vector>

#include "edgeband/instance.hpp"

namespace edgeband {

// Best achievable update performance as a function of the transmitted
// parameter count M, for one quantization level. Delivering M parameters
// pins the downlink time, the remaining time caps the upload proportion at
//
//   rho_cap(M) = clamp(cap0 - cap_slope * M, 0, 1),
//
// and the boundary value is g(min(rho_best, rho_cap(M))): a constant plateau
// up to `threshold`, then a concave non-increasing tail.
struct PerLevelBoundary {
    int level = 0;  // index into instance.levels
    double q = 0.0;
    GCurve g;

    double rho_best = 0.0;   // argmax of g over [0, 1]
    double plateau = 0.0;    // g(rho_best)
    double threshold = 0.0;  // end of the constant segment, clamped to [0, domain_hi]
    double domain_hi = 0.0;

    double cap0 = 0.0;       // S_u * B / (N * F * q)
    double cap_slope = 0.0;  // S_u * b / (N * F * q * T_total * S_d)

    double rho_cap(double m) const;
    double rho_opt(double m) const;
    double value(double m) const;
};

// Largest feasible upload proportion once M parameters occupy the downlink.
// Throws std::domain_error when M is outside [0, domain_hi].
double rho_cap(double m, int level, const ProblemInstance& instance);

PerLevelBoundary per_level_boundary(int level, const ProblemInstance& instance);

enum class SegmentKind { Constant, ConcaveDecreasing };

struct EnvelopeSegment {
    double m_lo = 0.0;
    double m_hi = 0.0;
    int level = 0;
    SegmentKind kind = SegmentKind::Constant;
};

struct EnvelopePoint {
    double value = 0.0;  // L_M(M)
    int level = 0;       // winning level index
    double rho = 0.0;    // optimal upload proportion at this M
};

struct EnvelopeOptions {
    int scan_points = 4096;          // crossing-detection grid density
    double crossing_tol_rel = 1e-9;  // bisection width, relative to domain_hi
};

// Pointwise maximum of the per-level boundaries with explicit knot
// structure: continuous, non-increasing, each piece constant or concave.
// Knots collect the domain ends, every clamped level threshold, and the
// bisection-located crossings of each level pair. evaluate() computes the
// true pointwise maximum (ties to the smaller level index), so dominance
// holds even if a crossing slipped below scan resolution.
class Envelope {
 public:
    Envelope(std::vector<PerLevelBoundary> boundaries, std::vector<double> knots,
             std::vector<EnvelopeSegment> segments, double m_max);

    EnvelopePoint evaluate(double m) const;
    int segment_index(double m) const;

    const std::vector<double>& knots() const { return knots_; }
    const std::vector<EnvelopeSegment>& segments() const { return segments_; }
    const std::vector<PerLevelBoundary>& boundaries() const { return boundaries_; }
    double domain_hi() const { return domain_hi_; }
    double model_params() const { return m_max_; }

 private:
    std::vector<PerLevelBoundary> boundaries_;
    std::vector<double> knots_;
    std::vector<EnvelopeSegment> segments_;
    double domain_hi_ = 0.0;
    double m_max_ = 0.0;
};

// Throws DegenerateDomain when domain_hi <= 0.
Envelope build_envelope(const ProblemInstance& instance, const EnvelopeOptions& options = {});

}  // namespace edgeband
