#pragma once

// Closed forms for the two generator families (Gauss and Cauchy-Lorentz):
// generator values, Fourier images, periodised masks Phi, spectral functions
// for the shift system and for the nodal (cardinal) system, and the Riesz
// bounds of both systems.
//
// Conventions: Fourier transform normalised as
//   F[phi](w) = (2 pi)^{-1/2} Integral phi(t) e^{-iwt} dt,
// spectral function P(w) = 2 pi sum_k |F[phi](w + 2 pi k)|^2. The Riesz
// bounds of a shift system are the extremes of P over [0, 2 pi]; for both
// families the minimum sits at w = pi and the maximum at w = 0.

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "riesz/theta.hpp"

namespace riesz {

enum class family { gauss, lorentz };

struct generator_spec {
    generator_spec(family f, double sigma_) : fam(f), sigma(sigma_) {
        if (!(sigma > 0.0) || !std::isfinite(sigma))
            throw std::domain_error("generator_spec: sigma must be positive and finite");
    }
    family fam;
    double sigma;
};

/// Two-sided Riesz bounds 0 < lower <= upper and their quotient.
struct riesz_bounds {
    double lower;
    double upper;
    double ratio;  ///< upper / lower
};

namespace detail {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;

/// Reduce x into [0, 2 pi).
inline double reduce_two_pi(double x) {
    double r = std::remainder(x, two_pi);
    if (r < 0) r += two_pi;
    return r;
}

inline double sqrt_pi() { return std::sqrt(pi); }

}  // namespace detail

/// phi_G(t) = exp(-t^2/(2 sigma^2)) or phi_L(t) = sigma^2/(sigma^2 + t^2).
inline double generator_value(const generator_spec& g, double t) {
    const double s = g.sigma;
    if (g.fam == family::gauss) return std::exp(-t * t / (2 * s * s));
    return s * s / (s * s + t * t);
}

/// F[phi_G](w) = sigma exp(-sigma^2 w^2 / 2);
/// F[phi_L](w) = sigma sqrt(pi/2) exp(-sigma |w|).
inline double fourier_image(const generator_spec& g, double omega) {
    const double s = g.sigma;
    if (g.fam == family::gauss) return s * std::exp(-s * s * omega * omega / 2);
    return s * std::sqrt(detail::pi / 2) * std::exp(-s * std::abs(omega));
}

/// Mask Phi(t) = sum_k phi(k) e^{-ikt} (2 pi periodic, strictly positive).
/// Lorentz: sigma pi cosh(sigma(t - pi))/sinh(sigma pi) on [0, 2 pi];
/// Gauss:   theta3(t/2, exp(-1/(2 sigma^2))).
inline double mask_phi(const generator_spec& g, double t) {
    const double s = g.sigma;
    const double tr = detail::reduce_two_pi(t);
    if (g.fam == family::gauss)
        return theta3<double>({tr / 2, std::exp(-1 / (2 * s * s))});
    // cosh(s(t-pi))/sinh(s pi) written with nonpositive exponents only
    const double num = std::exp(s * (tr - detail::two_pi)) + std::exp(-s * tr);
    return s * detail::pi * num / (1 - std::exp(-2 * s * detail::pi));
}

/// Spectral function P(w) of the generator shift system.
/// Lorentz: sigma^2 pi^2 cosh(2 sigma (w - pi))/sinh(2 sigma pi);
/// Gauss:   sigma sqrt(pi) theta3(w/2, exp(-1/(4 sigma^2))).
inline double spectral_p(const generator_spec& g, double omega) {
    const double s = g.sigma;
    const double w = detail::reduce_two_pi(omega);
    if (g.fam == family::gauss)
        return s * detail::sqrt_pi() * theta3<double>({w / 2, std::exp(-1 / (4 * s * s))});
    const double num = std::exp(2 * s * (w - detail::two_pi)) + std::exp(-2 * s * w);
    return s * s * detail::pi * detail::pi * num / (1 - std::exp(-4 * s * detail::pi));
}

/// Riesz bounds of the generator shift system: extremes of spectral_p, i.e.
/// A = P(pi), B = P(0).
inline riesz_bounds riesz_constants(const generator_spec& g) {
    const double s = g.sigma;
    riesz_bounds b{};
    if (g.fam == family::gauss) {
        const double q = std::exp(-1 / (4 * s * s));
        b.lower = s * detail::sqrt_pi() * theta3<double>({detail::pi / 2, q});
        b.upper = s * detail::sqrt_pi() * theta3<double>({0.0, q});
    } else {
        const double x = 2 * s * detail::pi;
        b.lower = s * s * detail::pi * detail::pi / std::sinh(x);
        b.upper = s * s * detail::pi * detail::pi / std::tanh(x);  // ratio == cosh(x)
    }
    b.ratio = b.upper / b.lower;
    return b;
}

/// Spectral function of the nodal (cardinal) system, P~(w) = P(w)/Phi(w)^2.
/// Lorentz: tanh(sigma pi)/2 * (2 - 1/cosh^2(sigma(w - pi)));
/// Gauss:   sigma sqrt(pi) theta3(w/2, q) / theta3(w/2, q^2)^2, q = exp(-1/(4 sigma^2)).
inline double nod_spectral_p(const generator_spec& g, double omega) {
    const double s = g.sigma;
    const double w = detail::reduce_two_pi(omega);
    if (g.fam == family::gauss) {
        const double q = std::exp(-1 / (4 * s * s));
        return s * detail::sqrt_pi() * p_ratio(w / 2, q);
    }
    const double c = std::cosh(s * (w - detail::pi));
    return std::tanh(s * detail::pi) / 2 * (2 - 1 / (c * c));
}

/// Riesz bounds of the nodal system: extremes of nod_spectral_p.
/// Lorentz: A~ = sinh^2(sigma pi)/sinh(2 sigma pi) = tanh(sigma pi)/2,
///          B~ = A~ (2 - 1/cosh^2(sigma pi)); both tend to 1/2 resp. 1.
inline riesz_bounds nod_riesz_constants(const generator_spec& g) {
    const double s = g.sigma;
    riesz_bounds b{};
    if (g.fam == family::gauss) {
        const double q = std::exp(-1 / (4 * s * s));
        b.lower = s * detail::sqrt_pi() * p_ratio(detail::pi / 2, q);
        b.upper = s * detail::sqrt_pi() * p_ratio(0.0, q);
    } else {
        const double c = std::cosh(s * detail::pi);
        b.lower = std::tanh(s * detail::pi) / 2;
        b.upper = b.lower * (2 - 1 / (c * c));
    }
    b.ratio = b.upper / b.lower;
    return b;
}

}  // namespace riesz
