#pragma once

// Nodal (cardinal interpolation) functions for the two generator families:
// coefficient computation, evaluation, interpolation on the integer grid,
// sinc, and the closed-form L2 distance of the Lorentz nodal function from
// sinc(pi t).
//
// The nodal function is phi~(t) = sum_k d_k phi(t - k) with phi~(m) = delta_{0m}
// on integers. Coefficients:
//
//   Gauss    d_k = (1/C) exp(k^2/(2 s^2)) sum_{r>=|k|} (-1)^r exp(-(r+1/2)^2/(2 s^2)),
//            C   = sum_r (4r+1) exp(-(2r+1/2)^2/(2 s^2));
//   Lorentz  d_k = (-1)^k sinh(s pi)/(s pi^2) Integral_0^pi cos(kt)/cosh(st) dt.
//
// Gauss coefficients alternate in sign and their magnitude decays only like
// exp(-|k|/(2 s^2)); the exp(k^2...) growth is folded into the tail-sum
// exponent so nothing overflows. Lorentz coefficients alternate for small |k|
// but settle into a constant-sign tail of size ~ (1 - e^{-2 s pi})/(pi^2 k^2);
// first_sign_alternation_break() reports where the pattern breaks, and
// coefficient_tail_envelope() bounds the truncated remainder empirically.

#include <cmath>
#include <cstdlib>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "riesz/quadrature.hpp"
#include "riesz/systems.hpp"

namespace riesz {

struct nod_coefficients {
    nod_coefficients(generator_spec spec_, int kmax_)
        : spec(spec_), kmax(kmax_), values(2 * size_t(kmax_) + 1, 0.0) {}

    generator_spec spec;
    int kmax;
    std::vector<double> values;        ///< d_k at index k + kmax, k in [-kmax, kmax]
    double quadrature_tolerance = 0;   ///< Lorentz: abs tolerance of each integral
    double tail_tolerance = 0;         ///< Gauss: relative series cut-off

    double at(int k) const { return values[size_t(k + kmax)]; }

    /// |d_kmax| / |d_0|; a crude conditioning indicator, not a hard error
    /// (slowly decaying families legitimately exceed small thresholds).
    double tail_ratio() const { return std::abs(at(kmax)) / std::abs(at(0)); }
    bool well_truncated(double threshold = 1e-3) const {
        return tail_ratio() < threshold;
    }
};

/// Smallest k >= 1 where sign(d_k) != -sign(d_{k-1}), if any. Sign
/// alternation is an observed property, not an assumed one.
inline std::optional<int> first_sign_alternation_break(const nod_coefficients& c) {
    for (int k = 1; k <= c.kmax; ++k) {
        const double prev = c.at(k - 1), cur = c.at(k);
        if (!(prev * cur < 0)) return k;
    }
    return std::nullopt;
}

/// Empirical bound on sum_{|k| > kmax} |d_k|, used as the honest truncation
/// tolerance in mask-duality and nod-property checks. Gauss tails are
/// geometric (ratio from the last two coefficients); Lorentz tails follow the
/// k^{-2} envelope of the last few computed coefficients.
inline double coefficient_tail_envelope(const nod_coefficients& c) {
    const int k = c.kmax;
    const double last = std::abs(c.at(k));
    if (c.spec.fam == family::gauss) {
        const double ratio = std::abs(c.at(k)) / std::abs(c.at(k - 1));
        if (!(ratio < 1)) return 2 * last * k;  // no decay visible; give up gracefully
        return 2 * last * ratio / (1 - ratio);
    }
    double envelope = 0;
    for (int j = std::max(1, k - 4); j <= k; ++j)
        envelope = std::max(envelope, double(j) * j * std::abs(c.at(j)));
    return 2 * 1.1 * envelope / k;  // sum_{j>k} c/j^2 < c/k, 10% slack on the envelope
}

inline nod_coefficients gauss_nod_coefficients(double sigma, int kmax,
                                               double tail_tolerance = 1e-16) {
    if (kmax < 1) throw std::domain_error("gauss_nod_coefficients: kmax must be >= 1");
    if (!(tail_tolerance > 0))
        throw std::domain_error("gauss_nod_coefficients: tail_tolerance must be positive");
    nod_coefficients out{generator_spec(family::gauss, sigma), kmax};
    out.tail_tolerance = tail_tolerance;
    const double inv2s2 = 1 / (2 * sigma * sigma);

    // C(sigma) = sum_r (4r+1) exp(-(2r+1/2)^2/(2 s^2)). The direct sum
    // cancels catastrophically once sigma > ~2.5 (C(3) ~ 2e-17 from O(1)
    // terms), so for sigma > 1 use its Poisson-transformed equivalent
    //   C = 2 sqrt(2 pi) pi s^3 sum_{j>=0} (-1)^j (2j+1) e^{-s^2 pi^2 (2j+1)^2/2},
    // whose first term dominates.
    double c_norm = 0;
    if (sigma <= 1.0) {
        double c_comp = 0;  // Kahan
        for (int r = 0;; ++r) {
            const double t_pos = (4.0 * r + 1) * std::exp(-(2 * r + 0.5) * (2 * r + 0.5) * inv2s2);
            const double rn = -double(r) - 1;
            const double t_neg =
                (4.0 * rn + 1) * std::exp(-(2 * rn + 0.5) * (2 * rn + 0.5) * inv2s2);
            for (double t : {t_pos, t_neg}) {
                const double y = t - c_comp;
                const double s = c_norm + y;
                c_comp = (s - c_norm) - y;
                c_norm = s;
            }
            if (std::abs(t_pos) + std::abs(t_neg) < tail_tolerance * std::abs(c_norm) && r > 4)
                break;
            if (r > 100000)
                throw convergence_error("gauss_nod_coefficients: C(sigma) did not converge",
                                        c_norm);
        }
    } else {
        constexpr double pi = std::numbers::pi;
        const double a = sigma * sigma * pi * pi / 2;
        double sum = 0;
        for (int j = 0; j < 40; ++j) {
            const double m = 2 * j + 1;
            const double term = (j & 1 ? -1.0 : 1.0) * m * std::exp(-a * m * m);
            sum += term;
            if (std::abs(term) < tail_tolerance * std::abs(sum)) break;
        }
        c_norm = 2 * std::sqrt(2 * pi) * pi * sigma * sigma * sigma * sum;
    }
    if (std::abs(c_norm) < 1e-300)
        throw conditioning_error("gauss_nod_coefficients: C(sigma) below 1e-300");

    for (int k = 0; k <= kmax; ++k) {
        // tail sum with exp(k^2/(2s^2)) folded into each exponent
        double acc = 0, comp = 0;
        for (int r = k;; ++r) {
            double term = std::exp(-((r + 0.5) * (r + 0.5) - double(k) * k) * inv2s2);
            if (r & 1) term = -term;
            const double y = term - comp;
            const double s = acc + y;
            comp = (s - acc) - y;
            acc = s;
            if (std::abs(term) < tail_tolerance * std::abs(acc) && r > k + 4) break;
            if (r > k + 1000000)
                throw convergence_error("gauss_nod_coefficients: tail sum did not converge", acc);
        }
        out.values[size_t(kmax + k)] = out.values[size_t(kmax - k)] = acc / c_norm;
    }
    return out;
}

inline nod_coefficients lorentz_nod_coefficients(double sigma, int kmax,
                                                 double quadrature_tolerance = 1e-12) {
    if (kmax < 1) throw std::domain_error("lorentz_nod_coefficients: kmax must be >= 1");
    if (!(quadrature_tolerance > 0))
        throw std::domain_error("lorentz_nod_coefficients: tolerance must be positive");
    nod_coefficients out{generator_spec(family::lorentz, sigma), kmax};
    out.quadrature_tolerance = quadrature_tolerance;
    constexpr double pi = std::numbers::pi;
    const double prefactor = std::sinh(sigma * pi) / (sigma * pi * pi);
    for (int k = 0; k <= kmax; ++k) {
        const double integral = adaptive_quadrature(
            [k, sigma](double t) { return std::cos(k * t) / std::cosh(sigma * t); }, 0.0, pi,
            quadrature_tolerance);
        const double dk = (k & 1 ? -1.0 : 1.0) * prefactor * integral;
        out.values[size_t(kmax + k)] = out.values[size_t(kmax - k)] = dk;
    }
    return out;
}

/// phi~(t) truncated to |k| <= kmax. At integers |m| <= kmax/2 this is
/// delta_{0m} up to the coefficient tail (see coefficient_tail_envelope).
inline double nod_function_eval(const nod_coefficients& c, double t) {
    double sum = c.at(0) * generator_value(c.spec, t);
    for (int k = 1; k <= c.kmax; ++k)
        sum += c.at(k) * (generator_value(c.spec, t - k) + generator_value(c.spec, t + k));
    return sum;
}

/// f~(t) = sum_n f(n) phi~(t - n). Reproduces the samples at interior integer
/// nodes; within kmax/2 of the window edge accuracy degrades gradually (the
/// infinite-grid identity is truncated, not windowed).
inline double interpolate(const nod_coefficients& c, const std::map<int, double>& samples,
                          double t) {
    if (samples.empty()) throw std::invalid_argument("interpolate: empty sample set");
    double sum = 0;
    for (const auto& [n, fn] : samples) sum += fn * nod_function_eval(c, t - n);
    return sum;
}

/// sin(pi t)/(pi t) with the removable singularity filled in.
inline double sinc(double t) {
    const double x = std::numbers::pi * t;
    if (std::abs(t) < 1e-8) return 1.0 - x * x / 6;  // |next term| < 1e-32
    return std::sin(x) / x;
}

/// || phi~_L(., sigma) - sinc(pi .) ||_{L2}^2 in closed form:
/// I1 - 2 I2 + 1 with
///   I1 = (1 - tanh(s pi)/(2 s pi)) tanh(s pi),
///   I2 = (1 - e^{-2 s pi}) (1 + ln((1 + e^{-2 s pi})/2)/(2 s pi)).
/// Tends to 0 as sigma -> infinity, like (2 ln 2 - 1)/(2 pi sigma).
inline double sinc_distance_closed_form(double sigma) {
    if (!(sigma > 0) || !std::isfinite(sigma))
        throw std::domain_error("sinc_distance_closed_form: sigma must be positive");
    const double x = sigma * std::numbers::pi;
    const double th = std::tanh(x);
    const double e2 = std::exp(-2 * x);
    const double i1 = (1 - th / (2 * x)) * th;
    const double i2 = (1 - e2) * (1 + (std::log1p(e2) - std::numbers::ln2) / (2 * x));
    return i1 - 2 * i2 + 1;
}

}  // namespace riesz
