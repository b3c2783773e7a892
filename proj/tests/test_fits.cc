#include "ftlab/fits.hh"

#include <algorithm>
#include <cmath>

#include "doctest.h"

using namespace ftlab;

TEST_CASE("fixed-exponent fit is exact on model data") {
    std::vector<FitPoint> pts;
    for (double p : {1e-3, 1e-4}) pts.push_back({p, 5.0 * p * p, 0.05});
    PowerFit f = fit_fixed_exponent(pts, 2.0);
    REQUIRE(f.ok);
    CHECK(f.coeff == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(f.coeff_sigma > 0);

    // single point pins the coefficient directly
    PowerFit g = fit_fixed_exponent({{1e-3, 1e-3, 0.1}}, 2.0);
    CHECK(g.coeff == doctest::Approx(1e3).epsilon(1e-10));

    // recovery of a bundled quadratic coefficient from its own curve
    double a33 = 54.21e4;
    std::vector<FitPoint> h;
    for (double p : {3e-5, 1e-4, 3e-4}) h.push_back({p, a33 * p * p, 0.02});
    CHECK(fit_fixed_exponent(h, 2.0).coeff == doctest::Approx(a33).epsilon(1e-10));

    CHECK(!fit_fixed_exponent({}, 2.0).ok);
}

TEST_CASE("free power-law fit recovers coefficient and exponent") {
    std::vector<FitPoint> pts;
    for (double p : {3e-4, 1e-3, 3e-3}) pts.push_back({p, 7513.0 * p * p, 0.03});
    PowerFit f = fit_power_law(pts);
    REQUIRE(f.ok);
    CHECK(f.exponent == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(f.coeff == doctest::Approx(7513.0).epsilon(1e-8));
    CHECK(f.exponent_sigma > 0);

    CHECK(!fit_power_law({{1e-3, 1e-3, 0.1}}).ok);  // underdetermined
    CHECK(!fit_power_law({{1e-3, 1e-3, 0.1}, {1e-3, 2e-3, 0.1}}).ok);
}

TEST_CASE("fits ignore point ordering") {
    std::vector<FitPoint> pts;
    for (double p : {1e-4, 3e-4, 1e-3}) pts.push_back({p, 42.0 * p * p, 0.1 / p});
    PowerFit a = fit_power_law(pts);
    std::reverse(pts.begin(), pts.end());
    PowerFit b = fit_power_law(pts);
    CHECK(a.coeff == doctest::Approx(b.coeff).epsilon(1e-12));
    CHECK(a.exponent == doctest::Approx(b.exponent).epsilon(1e-12));
}

TEST_CASE("fibonacci ladder") {
    long long want[] = {1, 2, 3, 5, 8, 13, 21};
    for (int l = 1; l <= 7; l++) CHECK(fibonacci(l) == want[l - 1]);
}

TEST_CASE("joint self-dual-chain fit and its level-5 prediction") {
    double A = 0.77, B = 39.6;
    std::vector<std::pair<int, FitPoint>> data;
    for (int l = 1; l <= 3; l++)
        for (double p : {3e-4, 1e-3, 3e-3}) {
            double pl = A * std::pow(B * p, (double)fibonacci(l));
            data.push_back({l, {p, pl, 0.05}});
        }
    C4c6Fit f = fit_c4c6(data);
    REQUIRE(f.ok);
    CHECK(f.A == doctest::Approx(A).epsilon(1e-8));
    CHECK(f.B == doctest::Approx(B).epsilon(1e-8));

    double p5 = f.A * std::pow(f.B * 1e-3, (double)fibonacci(5));
    CHECK(p5 == doctest::Approx(4.66e-12).epsilon(0.02));
    CHECK(p5 < 1e-10);
}

TEST_CASE("critical-exponent fit recovers its own parameters") {
    CurveSet c = load_constants("p1");
    std::vector<CritPoint> pts;
    for (int d : {11, 15, 21, 25})
        for (int i = -2; i <= 2; i++) {
            double p = c.surf_pth + i * 2e-4;
            double x = (p - c.surf_pth) * std::pow((double)d, 1.0 / c.surf_mu);
            pts.push_back({d, p, c.surf_C + c.surf_D * x + c.surf_E * x * x});
        }
    CriticalFit f = fit_critical_exponent(pts);
    REQUIRE(f.ok);
    CHECK(f.p_th == doctest::Approx(c.surf_pth).epsilon(1e-3));
    CHECK(f.mu == doctest::Approx(c.surf_mu).epsilon(0.05));
    CHECK(f.C == doctest::Approx(c.surf_C).epsilon(0.01));
    CHECK(f.sse < 1e-10);

    // pure linear data (E = 0) is reproduced with ~zero residual
    std::vector<CritPoint> lin;
    for (int d : {11, 15, 21})
        for (int i = -2; i <= 2; i++) {
            double p = 3e-3 + i * 2e-4;
            lin.push_back({d, p, 0.2 + 50.0 * (p - 3e-3) * std::pow((double)d, 1.0 / 1.5)});
        }
    CriticalFit g = fit_critical_exponent(lin);
    REQUIRE(g.ok);
    CHECK(g.sse < 1e-9);
}

TEST_CASE("threshold formulas reproduce the published values at gamma = p") {
    CurveSet c = load_constants("p1");
    ThresholdSet t = thresholds(c);
    CHECK(t.c4c6 == doctest::Approx(2.5e-2).epsilon(0.02));      // 2.5%
    CHECK(t.steane == doctest::Approx(2.98e-4).epsilon(0.02));   // 0.030%
    CHECK(t.c4_steane == doctest::Approx(1.4e-3).epsilon(0.04)); // 0.14%
    CHECK(t.surface == doctest::Approx(3.148e-3).epsilon(1e-3)); // 0.31%
}

TEST_CASE("all three idle-noise constant sets load and are positive") {
    for (const char* g : {"p1", "p2", "p10"}) {
        CurveSet c = load_constants(g);
        CHECK(c.c4c6_A > 0);
        CHECK(c.c4c6_B > 0);
        CHECK(c.steane_a1 > 0);
        CHECK(c.hamming_a.at(3).at(4) > 0);
        CHECK(c.hamming_a.at(7).at(8) > 0);
        ThresholdSet t = thresholds(c);
        CHECK(t.c4c6 > 0);
        CHECK(t.steane > 0);
        CHECK(t.c4_steane > t.steane);  // mixed chain beats the plain 7-qubit one
    }
}
