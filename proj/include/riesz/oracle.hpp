#pragma once

// Brute-force counterparts of the closed forms: truncated Poisson/spectral
// sums with explicit tail bounds, quadrature versions of the Fourier image
// and of the Gram entries, and the grid-based monotonicity check for the
// theta ratio P(t).
//
// Everything here is deliberately direct -- these routines exist to verify
// the closed forms in `systems` and `theta`, so they share no algebra with
// them beyond the generator and its Fourier image.

#include <cmath>
#include <numbers>
#include <optional>

#include "riesz/gram.hpp"
#include "riesz/quadrature.hpp"
#include "riesz/systems.hpp"
#include "riesz/theta.hpp"

namespace riesz {

/// Truncation of P(w) = 2 pi sum_k |F[phi](w + 2 pi k)|^2 to |k| <= kmax.
/// Tails are geometric (Lorentz) or super-geometric (Gauss); at desk-scale
/// kmax they sit far below double precision.
inline double direct_spectral_sum(const generator_spec& g, double omega, int kmax) {
    if (kmax < 1) throw std::domain_error("direct_spectral_sum: kmax must be >= 1");
    constexpr double two_pi = 2 * std::numbers::pi;
    double sum = 0;
    for (int k = -kmax; k <= kmax; ++k) {
        const double f = fourier_image(g, omega + two_pi * k);
        sum += f * f;
    }
    return two_pi * sum;
}

/// Both sides of the Poisson summation identity
///   sum_k phi(k) e^{-ikt} = sqrt(2 pi) sum_k F[phi](t + 2 pi k),
/// truncated to |k| <= kmax, with a priori bounds on the dropped tails.
/// The sample side is real by evenness of phi.
struct mask_sum_sides {
    double sample_side;
    double fourier_side;
    double sample_tail_bound;
    double fourier_tail_bound;
};

inline mask_sum_sides direct_mask_sum(const generator_spec& g, double t, int kmax) {
    if (kmax < 1) throw std::domain_error("direct_mask_sum: kmax must be >= 1");
    constexpr double pi = std::numbers::pi;
    constexpr double two_pi = 2 * pi;
    const double s = g.sigma;

    mask_sum_sides out{};
    out.sample_side = generator_value(g, 0);
    for (int k = 1; k <= kmax; ++k)
        out.sample_side += 2 * generator_value(g, k) * std::cos(k * t);

    out.fourier_side = fourier_image(g, t);
    for (int k = 1; k <= kmax; ++k)
        out.fourier_side += fourier_image(g, t + two_pi * k) + fourier_image(g, t - two_pi * k);
    out.fourier_side *= std::sqrt(two_pi);

    const double k1 = kmax + 1.0;
    if (g.fam == family::gauss) {
        // terms e^{-k^2/(2 s^2)}: ratio e^{-(2k+1)/(2 s^2)} between neighbours
        const double first = std::exp(-k1 * k1 / (2 * s * s));
        const double ratio = std::exp(-(2 * k1 + 1) / (2 * s * s));
        out.sample_tail_bound = 2 * first / (1 - ratio);
    } else {
        // monotone coefficients: Abel bound 2 a_{K+1}/|sin(t/2)|, integral bound
        // 2 sigma^2/K at the kink t == 0 (mod 2 pi)
        const double a_next = s * s / (s * s + k1 * k1);
        const double sin_half = std::abs(std::sin(t / 2));
        const double integral_bound = 2 * s * s / double(kmax);
        out.sample_tail_bound =
            sin_half > 0 ? std::min(2 * a_next / sin_half, integral_bound) : integral_bound;
    }
    {
        const double tr = detail::reduce_two_pi(t);
        const double lead = fourier_image(g, tr - two_pi * k1) + fourier_image(g, tr + two_pi * k1);
        const double ratio = g.fam == family::gauss
                                 ? std::exp(-s * s * two_pi * two_pi * (k1 + 0.5))
                                 : std::exp(-s * two_pi);
        out.fourier_tail_bound = std::sqrt(two_pi) * lead / (1 - ratio);
    }
    return out;
}

/// Sample-side Poisson sum sum_k phi(k) e^{-ikt} carried far enough that the
/// dropped tail is below tol. Gauss needs O(sigma) terms; the Lorentz
/// coefficients decay only like k^{-2}, so kmax comes from the Abel bound
/// 2 a_{K+1}/|sin(t/2)| <= tol (millions of terms near t = 0; a rotation
/// recurrence keeps that cheap).
inline double mask_sample_sum_to_tolerance(const generator_spec& g, double t, double tol) {
    if (!(tol > 0)) throw std::domain_error("mask_sample_sum_to_tolerance: tol must be positive");
    const double s = g.sigma;
    if (g.fam == family::gauss) {
        const double reach = s * std::sqrt(2 * std::log(4 / tol)) + 2;
        double sum = 1.0;
        for (int k = 1; k <= int(reach); ++k)
            sum += 2 * std::exp(-k * k / (2 * s * s)) * std::cos(k * t);
        return sum;
    }
    const double sin_half = std::abs(std::sin(t / 2));
    if (!(sin_half > 0))
        throw std::domain_error("mask_sample_sum_to_tolerance: lorentz sum needs t != 0 mod 2 pi");
    const long kmax = std::lround(std::sqrt(2 * s * s / (tol * sin_half)) + 8);
    const double c0 = std::cos(t), s0 = std::sin(t);
    double ck = c0, sk = s0;  // cos(kt), sin(kt)
    double sum = 1.0;
    for (long k = 1; k <= kmax; ++k) {
        sum += 2 * s * s / (s * s + double(k) * k) * ck;
        const double cn = ck * c0 - sk * s0;
        sk = sk * c0 + ck * s0;
        ck = cn;
    }
    return sum;
}

/// F[phi](omega) by numerical quadrature of the defining integral,
/// (2/sqrt(2 pi)) Integral_0^T phi(t) cos(omega t) dt plus a tail estimate.
/// Oscillations are resolved by splitting [0, T] into half-period segments.
inline double fourier_image_by_quadrature(const generator_spec& g, double omega,
                                          double tol = 1e-9) {
    constexpr double pi = std::numbers::pi;
    const double s = g.sigma;
    const double w = std::abs(omega);
    double cutoff;  // |tail beyond cutoff| < ~tol
    if (g.fam == family::gauss) {
        cutoff = s * std::sqrt(2 * std::log(2 / tol)) + 1;
    } else {
        // by parts: |tail| <= 2 s^2/(w T^2) for w > 0, else s^2/T
        cutoff = w > 0 ? std::sqrt(2 * s * s / (w * tol)) : s * s / tol;
    }
    const double segment = w > 0 ? pi / w : cutoff;
    auto f = [&](double t) { return generator_value(g, t) * std::cos(w * t); };
    double total = 0;
    double a = 0;
    while (a < cutoff) {
        const double b = std::min(a + segment, cutoff);
        total += adaptive_quadrature(f, a, b, tol * segment / cutoff / 4, 200);
        a = b;
    }
    return 2 / std::sqrt(2 * pi) * total;
}

/// <phi, phi(. - m)> by quadrature: central part directly, the two
/// unbounded tails through the substitution t = 1/u (the transformed
/// integrand vanishes smoothly at u = 0 for both families).
inline double gram_entry_by_quadrature(const generator_spec& g, int m, double tol = 1e-11) {
    const double reach = g.fam == family::gauss
                             ? 3 + 2 * g.sigma * std::sqrt(std::log(1 / tol))
                             : 50 * (g.sigma + 1);
    const double lo = -reach, hi = std::abs(double(m)) + reach;
    auto f = [&](double t) { return generator_value(g, t) * generator_value(g, t - m); };
    double total = adaptive_quadrature(f, lo, hi, tol / 2);
    auto tail = [&](double edge, double sign) {
        // Integral over t > edge of f(sign * t), via t = 1/u
        return adaptive_quadrature(
            [&](double u) {
                const double t = sign / u;
                return generator_value(g, t) * generator_value(g, t - m) / (u * u);
            },
            0.0, 1 / edge, tol / 4);
    };
    total += tail(hi, 1.0) + tail(-lo, -1.0);
    return total;
}

/// Grid report for the shape of P(t): decrease on (0, pi/2), increase on
/// (pi/2, pi), and nonpositivity of the closed-form derivative of
/// theta2/theta3 at nome p = q^2. Near t = 0 and t = pi the function is flat
/// to far below double resolution for nomes close to 1 (the variation scale
/// is e^{-pi^2/lambda}), so neighbours tied within a few ulp do not count as
/// violations.
struct monotonicity_report {
    double q;
    int grid_size;
    std::optional<double> first_decrease_violation;  ///< t of first violation on (0, pi/2)
    std::optional<double> first_increase_violation;  ///< t of first violation on (pi/2, pi)
    int derivative_sign_violations;

    bool passed() const {
        return !first_decrease_violation && !first_increase_violation &&
               derivative_sign_violations == 0;
    }
};

inline monotonicity_report monotonicity_check(double q, int grid_size,
                                              eval_policy<double> pol = {}) {
    if (!(q > 0 && q < 1)) throw std::domain_error("monotonicity_check: q must be in (0, 1)");
    if (grid_size < 10) throw std::domain_error("monotonicity_check: grid_size must be >= 10");
    constexpr double pi = std::numbers::pi;
    monotonicity_report rep{q, grid_size, std::nullopt, std::nullopt, 0};

    // comb exponents reach ~500 at nome e^{-1/100}, so each evaluation carries
    // |exponent|*eps relative noise; genuine shape breaks are far larger
    constexpr double slack = 2e-13;
    auto scan = [&](double lo, double hi, bool expect_decrease) -> std::optional<double> {
        double prev = p_ratio(lo + (hi - lo) / (grid_size + 1), q, pol);
        for (int i = 2; i <= grid_size; ++i) {
            const double t = lo + (hi - lo) * i / (grid_size + 1);
            const double cur = p_ratio(t, q, pol);
            const bool ok =
                expect_decrease ? cur <= prev * (1 + slack) : cur >= prev * (1 - slack);
            if (!ok) return t;
            prev = cur;
        }
        return std::nullopt;
    };
    rep.first_decrease_violation = scan(0.0, pi / 2, true);
    rep.first_increase_violation = scan(pi / 2, pi, false);

    const double p = q * q;
    for (int i = 1; i <= grid_size; ++i) {
        const double t = pi * i / (grid_size + 1);
        if (theta23_ratio_derivative(t, p, pol) > 0) ++rep.derivative_sign_violations;
    }
    return rep;
}

}  // namespace riesz
