#include "edgeband/numeric.hpp"

#include <charconv>
#include <stdexcept>

namespace edgeband::num {

std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 2) throw std::invalid_argument("linspace needs n >= 2");
    std::vector<double> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double t = static_cast<double>(i) / static_cast<double>(n - 1);
        out[static_cast<size_t>(i)] = lo + (hi - lo) * t;
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

TimeSplit exact_time_split(double t_total, double t_d_raw) {
    double t_d = std::clamp(t_d_raw, 0.0, t_total);
    if (t_d >= 0.5 * t_total) {
        // t_d in [T/2, T]: T - t_d is exact.
        return {t_total - t_d, t_d};
    }
    // t_d < T/2: the complement lands in [T/2, T], so the second subtraction
    // is exact and the pair sums back to T without rounding.
    double t_u = t_total - t_d;
    return {t_u, t_total - t_u};
}

std::string fmt(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace edgeband::num
