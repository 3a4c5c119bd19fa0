#include "edgeband/curves.hpp"

#include <algorithm>
#include <cmath>

#include "edgeband/numeric.hpp"

namespace edgeband {

GCurve GCurve::quadratic(double a, double c, double d) {
    GCurve g;
    g.family = GFamily::Quadratic;
    g.a = a;
    g.c = c;
    g.d = d;
    return g;
}

GCurve GCurve::log_saturation(double m0, double gain, double k) {
    GCurve g;
    g.family = GFamily::LogSaturation;
    g.m0 = m0;
    g.gain = gain;
    g.k = k;
    return g;
}

GCurve GCurve::exp_saturation(double m0, double gain, double k) {
    GCurve g;
    g.family = GFamily::ExpSaturation;
    g.m0 = m0;
    g.gain = gain;
    g.k = k;
    return g;
}

GCurve GCurve::tabulated(std::vector<std::pair<double, double>> points) {
    GCurve g;
    g.family = GFamily::Tabulated;
    g.points = std::move(points);
    return g;
}

static double interpolate_table(const std::vector<std::pair<double, double>>& pts, double rho) {
    if (pts.empty()) return 0.0;
    if (rho <= pts.front().first) return pts.front().second;
    if (rho >= pts.back().first) return pts.back().second;
    auto it = std::upper_bound(pts.begin(), pts.end(), rho,
                               [](double r, const auto& p) { return r < p.first; });
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    double t = (rho - lo.first) / (hi.first - lo.first);
    return lo.second + t * (hi.second - lo.second);
}

double GCurve::operator()(double rho) const {
    switch (family) {
        case GFamily::Quadratic:
            return num::clamp01(a + c * rho - d * rho * rho);
        case GFamily::LogSaturation:
            return num::clamp01(m0 + gain * std::log1p(k * rho) / std::log1p(k));
        case GFamily::ExpSaturation:
            return num::clamp01(m0 + gain * (1.0 - std::exp(-k * rho)));
        case GFamily::Tabulated:
            return interpolate_table(points, rho);
    }
    return 0.0;
}

double GCurve::argmax() const {
    if (family == GFamily::Quadratic) {
        if (d > 0.0) return num::clamp01(c / (2.0 * d));
        return c > 0.0 ? 1.0 : 0.0;
    }
    if (family == GFamily::Tabulated) {
        // Concave piecewise-linear: the maximum sits on a vertex.
        double best_rho = 0.0;
        double best_v = points.empty() ? 0.0 : points.front().second;
        for (const auto& [r, v] : points) {
            if (v > best_v) {
                best_v = v;
                best_rho = r;
            }
        }
        return best_rho;
    }
    auto eval = [this](double r) { return (*this)(r); };
    num::MaxPoint inner = num::golden_max(eval, 0.0, 1.0, 1e-10);
    // Snap to an endpoint when it does at least as well; keeps monotone
    // curves at exactly 0 or 1.
    double best_rho = inner.x;
    double best_v = inner.value;
    for (double r : {1.0, 0.0}) {
        double v = eval(r);
        if (v > best_v || (v == best_v && r < best_rho)) {
            best_v = v;
            best_rho = r;
        }
    }
    return best_rho;
}

const char* GCurve::family_name() const {
    switch (family) {
        case GFamily::Quadratic: return "quadratic";
        case GFamily::LogSaturation: return "log_saturation";
        case GFamily::ExpSaturation: return "exp_saturation";
        case GFamily::Tabulated: return "tabulated";
    }
    return "?";
}

PhiCurve PhiCurve::power(double gamma) {
    PhiCurve p;
    p.family = PhiFamily::Power;
    p.gamma = gamma;
    return p;
}

PhiCurve PhiCurve::exp_saturation(double k) {
    PhiCurve p;
    p.family = PhiFamily::ExpSaturation;
    p.k = k;
    return p;
}

PhiCurve PhiCurve::identity() {
    PhiCurve p;
    p.family = PhiFamily::Identity;
    return p;
}

double PhiCurve::operator()(double u) const {
    u = num::clamp01(u);
    switch (family) {
        case PhiFamily::Power:
            return std::pow(u, gamma);
        case PhiFamily::ExpSaturation:
            return (1.0 - std::exp(-k * u)) / (1.0 - std::exp(-k));
        case PhiFamily::Identity:
            return u;
    }
    return u;
}

const char* PhiCurve::family_name() const {
    switch (family) {
        case PhiFamily::Power: return "power";
        case PhiFamily::ExpSaturation: return "exp_saturation";
        case PhiFamily::Identity: return "identity";
    }
    return "?";
}

double FusionModel::value(double m, double map_star, double m_max) const {
    if (m <= 0.0) return map_pre;
    if (m >= m_max) return map_star;
    double u = m / m_max;
    return map_pre + (map_star - map_pre) * phi(u);
}

}  // namespace edgeband
