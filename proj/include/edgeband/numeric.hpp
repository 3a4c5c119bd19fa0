#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace edgeband::num {

inline double clamp01(double x) {
    return std::clamp(x, 0.0, 1.0);
}

// n evenly spaced values over [lo, hi], endpoints included. n >= 2.
std::vector<double> linspace(double lo, double hi, int n);

struct MaxPoint {
    double x = 0.0;
    double value = 0.0;
};

// Golden-section maximization on [lo, hi]. Shrinks the bracket until its
// width is <= width_tol, evaluating f at the classic interior probes plus the
// final bracket midpoint, and returns the best evaluated point (ties broken
// toward smaller x). Deterministic; suitable for concave or locally unimodal
// objectives.
template <typename F>
MaxPoint golden_max(F&& f, double lo, double hi, double width_tol) {
    constexpr double kInvPhi = 0.6180339887498949;
    constexpr int kMaxIter = 300;

    MaxPoint best{lo, f(lo)};
    auto probe = [&](double x) {
        double v = f(x);
        if (v > best.value || (v == best.value && x < best.x)) best = {x, v};
        return v;
    };
    probe(hi);

    double a = lo, b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = probe(x1);
    double f2 = probe(x2);
    for (int it = 0; it < kMaxIter && (b - a) > width_tol; ++it) {
        if (f1 >= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = probe(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = probe(x2);
        }
    }
    probe(0.5 * (a + b));
    return best;
}

struct TimeSplit {
    double t_u = 0.0;
    double t_d = 0.0;
};

// Splits t_total into uplink/downlink parts with t_d as close as possible to
// t_d_raw while guaranteeing t_u + t_d == t_total in double arithmetic.
// Relies on Sterbenz: a - b is exact whenever b is within [a/2, 2a], so one
// of the two complements below is computed without rounding.
TimeSplit exact_time_split(double t_total, double t_d_raw);

// Shortest decimal form that round-trips through from_chars. Locale-free.
std::string fmt(double v);

}  // namespace edgeband::num
