#pragma once

// Reference computations used only by the tests. Each one is written from the
// defining formula with plain loops so it shares no code path with the library.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using Point = std::vector<double>;

// Values computed with mpmath at 30 digits.
inline constexpr double kBumpIntegral = 0.443993816168079438;   // int exp(1/(s^2-1)) over (-1, 1)
inline constexpr double kBumpNormalization = 2.25228362104358101; // 1 / kBumpIntegral
inline constexpr double kBumpAbsMoment = 0.33445399770997533;   // E|s| under the unit bump

inline double bump(double s) {
    if (std::abs(s) >= 1.0) return 0.0;
    return kBumpNormalization * std::exp(1.0 / (s * s - 1.0));
}

// Composite Simpson rule on [lo, hi] with an even number of intervals.
inline double simpson(const std::function<double(double)>& g, double lo, double hi,
                      std::size_t intervals = 20000) {
    if (intervals % 2) ++intervals;
    const double h = (hi - lo) / static_cast<double>(intervals);
    double acc = g(lo) + g(hi);
    for (std::size_t i = 1; i < intervals; ++i) {
        acc += (i % 2 ? 4.0 : 2.0) * g(lo + h * static_cast<double>(i));
    }
    return acc * h / 3.0;
}

// (g * eta_eps)(t), integrating over the rescaled variable s in (-1, 1).
// Points where g is not smooth (in the t variable) split the range so Simpson
// only ever sees smooth pieces.
inline double convolve(const std::function<double(double)>& g, double eps, double t,
                       const std::vector<double>& breaks = {}, std::size_t intervals = 20000) {
    std::vector<double> cuts{-1.0, 1.0};
    for (double k : breaks) {
        const double s = (t - k) / eps;
        if (s > -1.0 && s < 1.0) cuts.push_back(s);
    }
    std::sort(cuts.begin(), cuts.end());
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double lo = cuts[i];
        const double hi = cuts[i + 1];
        const auto n = std::max<std::size_t>(2, static_cast<std::size_t>(intervals * (hi - lo) / 2.0));
        // g may jump at the cut, so its endpoint values are taken from inside the piece
        const double inset = 1e-9 * (hi - lo);
        acc += simpson([&](double s) { return g(t - eps * std::clamp(s, lo + inset, hi - inset)) * bump(s); },
                       lo, hi, n);
    }
    return acc;
}

inline double sawtooth(double kappa, double t) {
    const double r = t - 2.0 * std::floor((t + 1.0) / 2.0);
    return kappa * std::abs(r);
}

// Derivative of the normalized Weierstrass primitive:
// sum_{k=0..terms} alpha^k cos(pi nu^k t), divided by 2 sum_{k=0..terms} alpha^k.
inline double weierstrass_derivative(double alpha, int nu, int terms, double t) {
    double num = 0.0;
    double den = 0.0;
    for (int k = 0; k <= terms; ++k) {
        const double w = std::pow(alpha, k);
        num += w * std::cos(std::numbers::pi * std::pow(static_cast<double>(nu), k) * t);
        den += w;
    }
    return num / (2.0 * den);
}

inline double dot(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline double distance(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
}

inline Point lerp(const Point& a, const Point& b, double lambda) {
    Point out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = lambda * a[i] + (1.0 - lambda) * b[i];
    return out;
}

struct ScanResult {
    double lambda;
    double distance;
};

// Closest point of [a, b] to q by scanning lambda, then golden-section refinement.
inline ScanResult scan_projection(const Point& q, const Point& a, const Point& b,
                                  std::size_t samples = 2001) {
    double best_l = 0.0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < samples; ++i) {
        const double l = static_cast<double>(i) / static_cast<double>(samples - 1);
        const double d = distance(q, lerp(a, b, l));
        if (d < best_d) { best_d = d; best_l = l; }
    }
    const double step = 1.0 / static_cast<double>(samples - 1);
    double lo = std::max(0.0, best_l - step);
    double hi = std::min(1.0, best_l + step);
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 200; ++it) {
        const double m1 = hi - g * (hi - lo);
        const double m2 = lo + g * (hi - lo);
        if (distance(q, lerp(a, b, m1)) < distance(q, lerp(a, b, m2))) hi = m2;
        else lo = m1;
    }
    const double l = 0.5 * (lo + hi);
    const double d = distance(q, lerp(a, b, l));
    return d < best_d ? ScanResult{l, d} : ScanResult{best_l, best_d};
}

// Brute-force maximum of |g| over a uniform sample of [lo, hi].
inline double max_abs_on(const std::function<double(double)>& g, double lo, double hi,
                         std::size_t samples) {
    double m = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
        m = std::max(m, std::abs(g(t)));
    }
    return m;
}

inline std::vector<Point> random_points(std::size_t count, std::size_t dim, double lo, double hi,
                                        std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<Point> out(count, Point(dim));
    for (auto& p : out) for (auto& c : p) c = u(rng);
    return out;
}

} // namespace oracle
