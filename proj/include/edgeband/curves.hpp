#pragma once

#include <string>
#include <utility>
#include <vector>

namespace edgeband {

// Upload-performance curve g(rho): update quality of the large model as a
// function of the uploaded data proportion, for one quantization level.
// Parametric families evaluate clipped to [0, 1]; a curve whose clipped shape
// stops being concave is rejected at validation, not here.
enum class GFamily { Quadratic, LogSaturation, ExpSaturation, Tabulated };

struct GCurve {
    GFamily family = GFamily::Quadratic;

    // Quadratic: a + c*rho - d*rho^2, d >= 0.
    double a = 0.0, c = 0.0, d = 0.0;
    // LogSaturation: m0 + gain * log1p(k*rho) / log1p(k), k > 0.
    // ExpSaturation: m0 + gain * (1 - exp(-k*rho)), k > 0.
    double m0 = 0.0, gain = 0.0, k = 1.0;
    // Tabulated: (rho, value) knots, rho strictly increasing spanning [0, 1].
    std::vector<std::pair<double, double>> points;

    static GCurve quadratic(double a, double c, double d);
    static GCurve log_saturation(double m0, double gain, double k);
    static GCurve exp_saturation(double m0, double gain, double k);
    static GCurve tabulated(std::vector<std::pair<double, double>> points);

    double operator()(double rho) const;

    // argmax over [0, 1]: closed form for the quadratic family, exact vertex
    // scan for tables, golden section (width 1e-10) with an endpoint snap for
    // the saturation families.
    double argmax() const;

    const char* family_name() const;
};

// Downlink blending curve phi(u), u = M / M_max. phi(0) == 0 and phi(1) == 1
// hold exactly for every family.
enum class PhiFamily { Power, ExpSaturation, Identity };

struct PhiCurve {
    PhiFamily family = PhiFamily::Identity;
    double gamma = 1.0;  // Power: u^gamma, gamma > 0
    double k = 1.0;      // ExpSaturation: (1 - exp(-k*u)) / (1 - exp(-k)), k > 0

    static PhiCurve power(double gamma);
    static PhiCurve exp_saturation(double k);
    static PhiCurve identity();

    double operator()(double u) const;

    const char* family_name() const;
};

// End-model performance f(M, mAP*) = mAP_pre + (mAP* - mAP_pre) * phi(M/M_max).
// The M = 0 and M = M_max endpoints return mAP_pre and mAP* exactly.
struct FusionModel {
    double map_pre = 0.0;
    PhiCurve phi;

    double value(double m, double map_star, double m_max) const;
};

}  // namespace edgeband
