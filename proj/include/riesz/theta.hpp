#pragma once

// Jacobi theta functions theta1..theta4 for real argument and real nome
// q in [0, 1), plus the derived ratio P(t) = theta3(t,q)/theta3(t,q^2)^2 and
// two identity helpers.
//
// Two evaluation routes, selected by eval_policy::nome_switch_threshold:
//
//   q <= threshold   classical q-series (DLMF 20.2.1-20.2.4), a handful of
//                    terms since exponents grow like k^2;
//   q >  threshold   Gaussian-comb form of the imaginary (modular)
//                    transformation (DLMF 20.7.30-20.7.33): with
//                    lambda = -ln q,
//
//                      theta3(t, q) = sqrt(pi/lambda) sum_m exp(-(t - pi m)^2 / lambda),
//                      theta2(t, q) = sqrt(pi/lambda) sum_m (-1)^m exp(-(t - pi m)^2 / lambda),
//                      theta4(t, q) = theta3(t + pi/2, q),
//                      theta1(t, q) = -theta2(t + pi/2, q).
//
// The comb form converges in O(1) terms as q -> 1 and, crucially, has no
// cancellation between terms of like sign, so values as small as
// theta3(pi/2, e^{-1/100}) ~ 1e-106 come out with full relative accuracy.

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "riesz/errors.hpp"

namespace riesz {

template <class Real = double>
struct theta_args {
    Real t{};  ///< argument, radians
    Real q{};  ///< nome, in [0, 1)
};

template <class Real = double>
struct eval_policy {
    Real tail_tolerance = Real(1e-16);
    /// Nome above which evaluation switches to the modular (comb) route.
    /// The closed endpoints 0 and 1 force one route unconditionally.
    Real nome_switch_threshold = Real(0.5);
    int max_terms = 10000;
};

namespace detail {

template <class Real>
void check_theta(const theta_args<Real>& a, const eval_policy<Real>& pol) {
    if (!(a.q >= Real(0) && a.q < Real(1)))
        throw std::domain_error("theta: nome must lie in [0, 1)");
    if (!std::isfinite(a.t))
        throw std::domain_error("theta: argument must be finite");
    if (!(pol.tail_tolerance > Real(0)) ||
        !(pol.nome_switch_threshold >= Real(0) && pol.nome_switch_threshold <= Real(1)) ||
        pol.max_terms < 1)
        throw std::domain_error("theta: invalid eval_policy");
}

// 1 + 2 sum_{k>=1} (+-1)^k q^{k^2} cos(2kt).
// Absolute truncation error <= 2 tail_tolerance / (1 - q).
template <class Real>
Real theta34_series(Real t, Real q, bool alternating, const eval_policy<Real>& pol) {
    if (q == Real(0)) return Real(1);
    Real sum = Real(1);
    Real qk = q;       // q^{k^2}
    Real step = q;     // q^{2k-1}
    const Real q2 = q * q;
    for (int k = 1;; ++k) {
        Real term = 2 * qk * std::cos(2 * k * t);
        if (alternating && (k & 1)) term = -term;
        sum += term;
        if (2 * qk < pol.tail_tolerance) return sum;
        if (k >= pol.max_terms)
            throw convergence_error("theta series exceeded max_terms", double(sum));
        step *= q2;  // q^{2k+1}
        qk *= step;  // q^{(k+1)^2}
    }
}

// 2 sum_{k>=0} q^{(k+1/2)^2} * { cos((2k+1)t)            (theta2)
//                              { (-1)^k sin((2k+1)t)      (theta1)
template <class Real>
Real theta12_series(Real t, Real q, bool odd_fn, const eval_policy<Real>& pol) {
    if (q == Real(0)) return Real(0);
    Real qk = std::exp(std::log(q) / 4);  // q^{1/4} = q^{(0+1/2)^2}
    Real step = q * q;                    // q^{2k} at k=1
    Real sum = Real(0);
    for (int k = 0;; ++k) {
        const Real osc = odd_fn ? std::sin((2 * k + 1) * t) : std::cos((2 * k + 1) * t);
        Real term = 2 * qk * osc;
        if (odd_fn && (k & 1)) term = -term;
        sum += term;
        if (2 * qk < pol.tail_tolerance) return sum;
        if (k >= pol.max_terms)
            throw convergence_error("theta series exceeded max_terms", double(sum));
        qk *= step;      // q^{(k+3/2)^2}
        step *= q * q;   // q^{2k+2}
    }
}

// sqrt(pi/lambda) * sum_m s_m exp(-(t - pi m)^2 / lambda), s_m = (-1)^m if
// alternating. Terms are summed outward from the nearest comb centre; both
// flanks decay monotonically, so the stop test on the flank terms bounds the
// remaining tail by a geometric factor.
template <class Real>
Real theta_comb(Real t, Real lambda, bool alternating, const eval_policy<Real>& pol) {
    constexpr Real pi = std::numbers::pi_v<Real>;
    const long m0 = std::lround(t / pi);
    auto term = [&](long m) {
        const Real d = t - pi * Real(m);
        Real g = std::exp(-d * d / lambda);
        if (alternating && (m & 1L)) g = -g;
        return g;
    };
    Real sum = term(m0);
    for (long j = 1;; ++j) {
        const Real lo = term(m0 - j);
        const Real hi = term(m0 + j);
        sum += lo + hi;
        if (std::abs(lo) + std::abs(hi) < pol.tail_tolerance) break;
        if (j >= pol.max_terms)
            throw convergence_error("theta comb sum exceeded max_terms", double(sum));
    }
    return std::sqrt(pi / lambda) * sum;
}

template <class Real>
bool use_comb(Real q, const eval_policy<Real>& pol) {
    return q > pol.nome_switch_threshold && q > Real(0);
}

}  // namespace detail

template <class Real = double>
Real theta3(theta_args<Real> args, eval_policy<Real> pol = {}) {
    detail::check_theta(args, pol);
    if (!detail::use_comb(args.q, pol))
        return detail::theta34_series(args.t, args.q, /*alternating=*/false, pol);
    return detail::theta_comb(args.t, -std::log(args.q), /*alternating=*/false, pol);
}

template <class Real = double>
Real theta4(theta_args<Real> args, eval_policy<Real> pol = {}) {
    detail::check_theta(args, pol);
    if (!detail::use_comb(args.q, pol))
        return detail::theta34_series(args.t, args.q, /*alternating=*/true, pol);
    constexpr Real pi = std::numbers::pi_v<Real>;
    return detail::theta_comb(args.t + pi / 2, -std::log(args.q), false, pol);
}

template <class Real = double>
Real theta2(theta_args<Real> args, eval_policy<Real> pol = {}) {
    detail::check_theta(args, pol);
    if (!detail::use_comb(args.q, pol))
        return detail::theta12_series(args.t, args.q, /*odd_fn=*/false, pol);
    return detail::theta_comb(args.t, -std::log(args.q), /*alternating=*/true, pol);
}

template <class Real = double>
Real theta1(theta_args<Real> args, eval_policy<Real> pol = {}) {
    detail::check_theta(args, pol);
    if (args.t == Real(0)) return Real(0);  // odd in t
    if (!detail::use_comb(args.q, pol))
        return detail::theta12_series(args.t, args.q, /*odd_fn=*/true, pol);
    constexpr Real pi = std::numbers::pi_v<Real>;
    return -detail::theta_comb(args.t + pi / 2, -std::log(args.q), true, pol);
}

/// P(t) = theta3(t, q) / theta3(t, q^2)^2. Strictly positive; decreases on
/// (0, pi/2) and increases on (pi/2, pi).
template <class Real = double>
Real p_ratio(Real t, Real q, eval_policy<Real> pol = {}) {
    const Real num = theta3<Real>({t, q}, pol);
    const Real den = theta3<Real>({t, q * q}, pol);
    return num / (den * den);
}

/// theta3(t,q)*theta3(0,q) - theta3(t,q^2)^2 - theta2(t,q^2)^2; identically
/// zero in exact arithmetic (Watson's addition identity at w = 0).
template <class Real = double>
Real watson_residual(Real t, Real q, eval_policy<Real> pol = {}) {
    const Real q2 = q * q;
    const Real t3 = theta3<Real>({t, q2}, pol);
    const Real t2 = theta2<Real>({t, q2}, pol);
    return theta3<Real>({t, q}, pol) * theta3<Real>({Real(0), q}, pol) - t3 * t3 - t2 * t2;
}

/// Closed form of d/dt [theta2(t,p)/theta3(t,p)]:
///   -theta4(0,p)^2 * theta1(t,p) * theta4(t,p) / theta3(t,p)^2.
/// Nonpositive on (0, pi) since theta1 > 0 there and theta3, theta4 > 0.
template <class Real = double>
Real theta23_ratio_derivative(Real t, Real p, eval_policy<Real> pol = {}) {
    const Real t40 = theta4<Real>({Real(0), p}, pol);
    const Real t3 = theta3<Real>({t, p}, pol);
    return -t40 * t40 * theta1<Real>({t, p}, pol) * theta4<Real>({t, p}, pol) / (t3 * t3);
}

}  // namespace riesz
