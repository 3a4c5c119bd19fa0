#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "edgeband/model.hpp"
#include "support/testgen.hpp"

using namespace edgeband;

namespace {

bool has_violation(const Feasibility& f, Constraint c) {
    for (Constraint v : f.violations)
        if (v == c) return true;
    return false;
}

bool has_error(const ValidationReport& r, CheckCode code) {
    for (const auto& e : r.errors)
        if (e.code == code) return true;
    return false;
}

}  // namespace

TEST_CASE("uplink_rate evaluates N*rho*F*q") {
    SystemParams p = testgen::reference_instance().params;
    CHECK(uplink_rate(0.0, 8.0, p) == 0.0);
    CHECK(uplink_rate(0.5, 8.0, p) == doctest::Approx(40000.0).epsilon(1e-12));
    CHECK(uplink_rate(1.0, 16.0, p) == doctest::Approx(160000.0).epsilon(1e-12));
    CHECK_THROWS_AS(uplink_rate(-0.1, 8.0, p), std::domain_error);
    CHECK_THROWS_AS(uplink_rate(1.1, 8.0, p), std::domain_error);
    CHECK_THROWS_AS(uplink_rate(0.5, 0.0, p), std::domain_error);
}

TEST_CASE("downlink_rate evaluates M*b/T_total") {
    SystemParams p = testgen::reference_instance().params;
    CHECK(downlink_rate(0.0, p) == 0.0);
    CHECK(downlink_rate(1e6, p) == doctest::Approx(8e5).epsilon(1e-12));
    p.total_time_s = 1.0;
    CHECK(downlink_rate(1e6, p) == doctest::Approx(8e6).epsilon(1e-12));
    CHECK_THROWS_AS(downlink_rate(-1.0, p), std::domain_error);
    CHECK_THROWS_AS(downlink_rate(p.model_params * 1.5, p), std::domain_error);
}

TEST_CASE("rates scale exactly when one argument doubles") {
    std::mt19937_64 rng(101);
    std::uniform_real_distribution<double> u(0.01, 0.5);
    for (int i = 0; i < 200; ++i) {
        SystemParams p = testgen::reference_instance().params;
        p.frame_rate = u(rng) * 100.0;
        p.frame_params = u(rng) * 1e4;
        double rho = u(rng);
        double q = u(rng) * 30.0 + 1.0;
        CHECK(uplink_rate(2.0 * rho, q, p) == 2.0 * uplink_rate(rho, q, p));
        CHECK(uplink_rate(rho, 2.0 * q, p) == 2.0 * uplink_rate(rho, q, p));
        SystemParams p2 = p;
        p2.frame_rate *= 2.0;
        CHECK(uplink_rate(rho, q, p2) == 2.0 * uplink_rate(rho, q, p));

        double m = u(rng) * p.model_params;
        SystemParams pb = p;
        pb.bits_per_param *= 2.0;
        CHECK(downlink_rate(2.0 * m, p) == 2.0 * downlink_rate(m, p));
        CHECK(downlink_rate(m, pb) == 2.0 * downlink_rate(m, p));
    }
}

TEST_CASE("check_feasible accepts the all-zero candidate") {
    auto inst = testgen::reference_instance();
    Candidate zero{0.0, 0.0, 8.0, 0.0, 0.0};
    auto f = check_feasible(zero, inst);
    CHECK(f.feasible);
    CHECK(f.violations.empty());
}

TEST_CASE("check_feasible flags an exceeded time budget as 7c") {
    auto inst = testgen::reference_instance();
    Candidate c{0.0, 0.0, 8.0, 9.0, 6.0};  // T_u + T_d = 1.5 * T_total
    auto f = check_feasible(c, inst);
    CHECK_FALSE(f.feasible);
    CHECK(f.violations.size() == 1);
    CHECK(has_violation(f, Constraint::TimeBudget));
    CHECK(std::string(constraint_label(Constraint::TimeBudget)) == "7c");
}

TEST_CASE("check_feasible accepts the reference full-load split") {
    auto inst = testgen::reference_instance();
    // M=1e6, rho=1, q=8, T_d=8, T_u=2: uplink 2e5 >= 8e4, downlink at equality.
    Candidate c{1e6, 1.0, 8.0, 2.0, 8.0};
    CHECK(check_feasible(c, inst).feasible);
}

TEST_CASE("check_feasible reports each violated constraint id") {
    auto inst = testgen::reference_instance();
    Candidate c{2e6, 1.5, 5.0, 2.0, 8.0};
    auto f = check_feasible(c, inst);
    CHECK_FALSE(f.feasible);
    CHECK(has_violation(f, Constraint::RhoAndLevel));
    CHECK(has_violation(f, Constraint::ModelRange));
    CHECK(has_violation(f, Constraint::DownlinkRate));

    Candidate starved{1e6, 1.0, 8.0, 0.1, 9.9};  // uplink time too short for rho=1
    auto f2 = check_feasible(starved, inst);
    CHECK_FALSE(f2.feasible);
    CHECK(has_violation(f2, Constraint::UplinkRate));
}

TEST_CASE("feasibility is monotone in bandwidth") {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        auto inst = testgen::random_instance(rng);
        const auto& p = inst.params;
        int j = static_cast<int>(rng() % inst.levels.size());
        double m = u(rng) * p.domain_hi();
        double t_d = u(rng) * p.total_time_s;
        Candidate c{m, u(rng), inst.levels[static_cast<size_t>(j)].q, p.total_time_s - t_d, t_d};
        if (!feasible_fast(c, inst)) continue;
        ProblemInstance wider = inst;
        wider.params.bandwidth_hz *= 1.0 + 3.0 * u(rng);
        CHECK(feasible_fast(c, wider));
    }
}

TEST_CASE("fusion boundary identities are exact") {
    std::mt19937_64 rng(303);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (const PhiCurve& phi :
         {PhiCurve::identity(), PhiCurve::power(2.3), PhiCurve::power(0.7),
          PhiCurve::exp_saturation(4.2)}) {
        FusionModel fusion{0.37, phi};
        for (int i = 0; i < 100; ++i) {
            double s = u(rng);
            CHECK(fusion.value(0.0, s, 1e6) == 0.37);
            CHECK(fusion.value(1e6, s, 1e6) == s);
        }
    }
}

TEST_CASE("fusion increases in M when the update helps") {
    FusionModel fusion{0.4, PhiCurve::power(1.7)};
    double prev = fusion.value(0.0, 0.9, 1e6);
    for (int i = 1; i <= 100; ++i) {
        double v = fusion.value(1e4 * i, 0.9, 1e6);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("validate_instance accepts the reference setup") {
    auto report = validate_instance(testgen::reference_instance());
    CHECK(report.ok());
    REQUIRE(report.levels.size() == 1);
    CHECK(report.levels[0].rho_best == doctest::Approx(1.0));
    CHECK(report.levels[0].plateau == doctest::Approx(0.7));
}

TEST_CASE("validate_instance rejects a convex table") {
    auto inst = testgen::reference_instance();
    inst.levels[0].g = GCurve::tabulated({{0.0, 0.5}, {0.5, 0.6}, {1.0, 0.9}});
    auto report = validate_instance(inst);
    CHECK_FALSE(report.ok());
    CHECK(has_error(report, CheckCode::ConcavityViolation));
}

TEST_CASE("validate_instance rejects nonpositive and fractional parameters") {
    auto inst = testgen::reference_instance();
    inst.params.bandwidth_hz = 0.0;
    CHECK(has_error(validate_instance(inst), CheckCode::NonpositiveParam));

    inst = testgen::reference_instance();
    inst.params.bits_per_param = 2.5;
    CHECK(has_error(validate_instance(inst), CheckCode::NonpositiveParam));

    inst = testgen::reference_instance();
    inst.levels.clear();
    CHECK(has_error(validate_instance(inst), CheckCode::EmptyLevelSet));

    inst = testgen::reference_instance();
    inst.levels.push_back(inst.levels[0]);
    CHECK(has_error(validate_instance(inst), CheckCode::DuplicateLevel));
}

TEST_CASE("validate_instance checks phi monotonicity") {
    auto inst = testgen::reference_instance();
    inst.fusion.phi = PhiCurve::power(2.0);  // u^2: strictly increasing
    CHECK(validate_instance(inst).ok());

    inst.fusion.phi = PhiCurve::power(-1.0);
    CHECK_FALSE(validate_instance(inst).ok());
}

TEST_CASE("validate_instance warns when updates cannot help") {
    auto inst = testgen::reference_instance();
    inst.fusion.map_pre = 0.9;  // above the 0.7 plateau
    auto report = validate_instance(inst);
    CHECK(report.ok());
    CHECK_FALSE(report.warnings.empty());
}

TEST_CASE("loaded curves pass the midpoint concavity property") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10; ++i) {
        auto inst = testgen::random_instance(rng);
        REQUIRE(validate_instance(inst).ok());
        for (const auto& level : inst.levels) {
            for (int t = 0; t < 100; ++t) {
                double r1 = u(rng), r2 = u(rng);
                double mid = 0.5 * (r1 + r2);
                CHECK(level.g(mid) >= 0.5 * (level.g(r1) + level.g(r2)) - 1e-9);
            }
        }
    }
}

TEST_CASE("quadratic and power examples pass validation") {
    auto inst = testgen::reference_instance();
    inst.levels[0].g = GCurve::quadratic(0.5, 0.3, 0.1);
    inst.fusion.phi = PhiCurve::power(2.0);
    CHECK(validate_instance(inst).ok());
}
