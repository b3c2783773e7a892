#include "ftlab/fits.hh"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace ftlab {

CurveSet load_constants(const std::string& gamma_key, const std::string& path) {
    std::string file = path.empty() ? std::string(FTLAB_DATA_DIR) + "/fit_constants.json"
                                    : path;
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    nlohmann::json j;
    in >> j;

    CurveSet c;
    const auto& g = gamma_key;
    c.c4c6_A = j["c4c6"][g]["A"];
    c.c4c6_B = j["c4c6"][g]["B"];
    c.surf_A = j["surface"][g]["A"];
    c.surf_B = j["surface"][g]["B"];
    c.surf_pth = j["surface_critical"][g]["p_th"];
    c.surf_mu = j["surface_critical"][g]["mu"];
    c.surf_C = j["surface_critical"][g]["C"];
    c.surf_D = j["surface_critical"][g]["D"];
    c.surf_E = j["surface_critical"][g]["E"];
    c.steane_a1 = j["steane"][g]["a1"];
    c.steane_a2 = j["steane"][g]["a2"];
    c.c4_steane_a2 = j["c4_steane"][g]["a2"];
    for (auto& [r, row] : j["hamming"][g].items())
        for (auto& [rn, a] : row.items())
            c.hamming_a[std::stoi(r)][std::stoi(rn)] = a;
    return c;
}

namespace {

double weight_of(const FitPoint& pt) {
    return pt.sigma_log10 > 0 ? 1.0 / (pt.sigma_log10 * pt.sigma_log10) : 1.0;
}

}  // namespace

PowerFit fit_fixed_exponent(const std::vector<FitPoint>& pts, double exponent) {
    PowerFit f;
    double sw = 0, sy = 0;
    for (const FitPoint& pt : pts) {
        if (pt.p <= 0 || pt.p_l <= 0) continue;
        double w = weight_of(pt);
        sw += w;
        sy += w * (std::log10(pt.p_l) - exponent * std::log10(pt.p));
    }
    if (sw <= 0) return f;
    f.coeff = std::pow(10.0, sy / sw);
    f.coeff_sigma = f.coeff * std::log(10.0) * std::sqrt(1.0 / sw);
    f.exponent = exponent;
    f.ok = true;
    return f;
}

PowerFit fit_power_law(const std::vector<FitPoint>& pts) {
    PowerFit f;
    // weighted straight-line fit of y = a + b x in log10 space
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const FitPoint& pt : pts) {
        if (pt.p <= 0 || pt.p_l <= 0) continue;
        double w = weight_of(pt);
        double x = std::log10(pt.p), y = std::log10(pt.p_l);
        sw += w;
        sx += w * x;
        sy += w * y;
        sxx += w * x * x;
        sxy += w * x * y;
    }
    double det = sw * sxx - sx * sx;
    if (sw <= 0 || std::fabs(det) < 1e-12 * sw * sxx) return f;  // degenerate
    double b = (sw * sxy - sx * sy) / det;
    double a = (sxx * sy - sx * sxy) / det;
    f.coeff = std::pow(10.0, a);
    f.exponent = b;
    f.exponent_sigma = std::sqrt(sw / det);
    f.coeff_sigma = f.coeff * std::log(10.0) * std::sqrt(sxx / det);
    f.ok = true;
    return f;
}

long long fibonacci(int l) {
    long long a = 1, b = 2;  // F_1, F_2
    if (l <= 1) return 1;
    for (int i = 2; i < l; i++) {
        long long c = a + b;
        a = b;
        b = c;
    }
    return b;
}

C4c6Fit fit_c4c6(const std::vector<std::pair<int, FitPoint>>& level_points) {
    // log10 P - F_l log10 p = log10 A + F_l log10 B: line fit against F_l
    C4c6Fit f;
    double sw = 0, sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& [level, pt] : level_points) {
        if (pt.p <= 0 || pt.p_l <= 0) continue;
        double w = weight_of(pt);
        double x = (double)fibonacci(level);
        double y = std::log10(pt.p_l) - x * std::log10(pt.p);
        sw += w;
        sx += w * x;
        sy += w * y;
        sxx += w * x * x;
        sxy += w * x * y;
    }
    double det = sw * sxx - sx * sx;
    if (sw <= 0 || std::fabs(det) < 1e-12 * sw * sxx) return f;
    f.B = std::pow(10.0, (sw * sxy - sx * sy) / det);
    f.A = std::pow(10.0, (sxx * sy - sx * sxy) / det);
    f.ok = true;
    return f;
}

namespace {

// solve the normal equations of P = C + D x + E x^2 for fixed (p_th, mu)
double quad_sse(const std::vector<CritPoint>& pts, double p_th, double mu,
                double out[3]) {
    double m[3][4] = {};
    for (const CritPoint& pt : pts) {
        double x = (pt.p - p_th) * std::pow((double)pt.d, 1.0 / mu);
        double row[3] = {1.0, x, x * x};
        for (int i = 0; i < 3; i++) {
            for (int j = 0; j < 3; j++) m[i][j] += row[i] * row[j];
            m[i][3] += row[i] * pt.p_l;
        }
    }
    for (int c = 0; c < 3; c++) {  // gaussian elimination, partial pivot
        int piv = c;
        for (int r = c + 1; r < 3; r++)
            if (std::fabs(m[r][c]) > std::fabs(m[piv][c])) piv = r;
        for (int j = 0; j < 4; j++) std::swap(m[c][j], m[piv][j]);
        if (std::fabs(m[c][c]) < 1e-300) return 1e300;
        for (int r = 0; r < 3; r++) {
            if (r == c) continue;
            double f = m[r][c] / m[c][c];
            for (int j = c; j < 4; j++) m[r][j] -= f * m[c][j];
        }
    }
    for (int i = 0; i < 3; i++) out[i] = m[i][3] / m[i][i];
    double sse = 0;
    for (const CritPoint& pt : pts) {
        double x = (pt.p - p_th) * std::pow((double)pt.d, 1.0 / mu);
        double r = pt.p_l - (out[0] + out[1] * x + out[2] * x * x);
        sse += r * r;
    }
    return sse;
}

}  // namespace

CriticalFit fit_critical_exponent(const std::vector<CritPoint>& pts) {
    CriticalFit best;
    if (pts.size() < 5) return best;
    double p_lo = 1e300, p_hi = 0;
    for (const CritPoint& pt : pts) {
        p_lo = std::min(p_lo, pt.p);
        p_hi = std::max(p_hi, pt.p);
    }
    double c_pth = 0.5 * (p_lo + p_hi), w_pth = 0.5 * (p_hi - p_lo);
    double c_mu = 1.5, w_mu = 1.0;
    best.sse = 1e300;
    for (int stage = 0; stage < 6; stage++) {
        for (int i = 0; i <= 20; i++) {
            double pth = c_pth + w_pth * (i - 10) / 10.0;
            for (int j = 0; j <= 20; j++) {
                double mu = c_mu + w_mu * (j - 10) / 10.0;
                if (mu < 0.3 || pth <= 0) continue;
                double cde[3];
                double sse = quad_sse(pts, pth, mu, cde);
                if (sse < best.sse) {
                    best = {pth, mu, cde[0], cde[1], cde[2], sse, true};
                }
            }
        }
        c_pth = best.p_th;
        c_mu = best.mu;
        w_pth /= 8;
        w_mu /= 8;
    }
    return best;
}

ThresholdSet thresholds(const CurveSet& c) {
    ThresholdSet t;
    t.c4c6 = 1.0 / c.c4c6_B;
    t.steane = std::pow(c.steane_a2, -1.0 / 3.0);
    t.c4_steane = std::pow(c.steane_a2, -1.0 / 9.0) * std::pow(c.c4_steane_a2, -1.0 / 3.0);
    t.surface = c.surf_pth;
    return t;
}

}  // namespace ftlab
