#ifndef FTLAB_FITS_HH
#define FTLAB_FITS_HH

#include <map>
#include <string>
#include <vector>

namespace ftlab {

// Fitted scaling constants for one idle-noise rule.  Bundled defaults live in
// data/fit_constants.json, keyed "p1" (gamma = p), "p2" (p/2), "p10" (p/10).
struct CurveSet {
    double c4c6_A = 0, c4c6_B = 0;
    double surf_A = 0, surf_B = 0;
    double surf_pth = 0, surf_mu = 0, surf_C = 0, surf_D = 0, surf_E = 0;
    double steane_a1 = 0, steane_a2 = 0;
    double c4_steane_a2 = 0;
    std::map<int, std::map<int, double>> hamming_a;  // a[r][r_next], P = a x^2
};

CurveSet load_constants(const std::string& gamma_key = "p1",
                        const std::string& path = "");

struct FitPoint {
    double p = 0, p_l = 0, sigma_log10 = 0;  // sigma <= 0 -> unit weight
};

struct PowerFit {
    double coeff = 0, coeff_sigma = 0;
    double exponent = 0, exponent_sigma = 0;
    bool ok = false;
};

// Weighted least squares of log10 p_l against log10 p, weights 1/sigma^2.
// fit_fixed_exponent pins the slope and solves only the coefficient;
// fit_power_law fits both (needs >= 2 distinct p).
PowerFit fit_fixed_exponent(const std::vector<FitPoint>& pts, double exponent);
PowerFit fit_power_law(const std::vector<FitPoint>& pts);

// F_1 = 1, F_2 = 2, F_l = F_{l-1} + F_{l-2}
long long fibonacci(int l);

// Joint fit of P_l = A (B p)^{F_l} over (level, point) data; linear in
// (log A, log B) after dividing out p^{F_l}.  Needs >= 2 distinct levels.
struct C4c6Fit {
    double A = 0, B = 0;
    bool ok = false;
};
C4c6Fit fit_c4c6(const std::vector<std::pair<int, FitPoint>>& level_points);

// Critical-exponent fit near threshold: P = C + D x + E x^2 with
// x = (p - p_th) d^{1/mu}.  (C, D, E) solved linearly for each (p_th, mu)
// on a refined grid search.
struct CritPoint {
    int d = 0;
    double p = 0, p_l = 0;
};
struct CriticalFit {
    double p_th = 0, mu = 0, C = 0, D = 0, E = 0;
    double sse = 0;
    bool ok = false;
};
CriticalFit fit_critical_exponent(const std::vector<CritPoint>& pts);

// Threshold formulas: 1/B for the distance-2 self-dual chain, a2^{-1/3} for
// the 7-qubit chain, a2^{-1/9} * a2'^{-1/3} for the mixed chain (the source
// labels that equation's left-hand side with the plain 7-qubit chain, an
// apparent typo; implemented per the surrounding text), and the critical-fit
// parameter for the surface code.
struct ThresholdSet {
    double c4c6 = 0, steane = 0, c4_steane = 0, surface = 0;
};
ThresholdSet thresholds(const CurveSet& c);

}  // namespace ftlab

#endif
