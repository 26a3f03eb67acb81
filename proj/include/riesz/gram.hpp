#pragma once

// Finite Gram sections of the shift systems and their extreme eigenvalues.
// For n shifts k in [-(n-1)/2, (n-1)/2] the Gram matrix is symmetric positive
// definite Toeplitz with closed-form entries
//
//   Gauss    <phi(.-j), phi(.-k)> = sigma sqrt(pi) exp(-(j-k)^2/(4 sigma^2)),
//   Lorentz  <phi(.-j), phi(.-k)> = 2 pi sigma^3 / (4 sigma^2 + (j-k)^2),
//
// and every eigenvalue lies in [A, B], the Riesz bounds of the infinite
// system; lambda_min decreases and lambda_max increases as sections grow.
//
// The nodal-system variant obtains its Toeplitz entries as Fourier
// coefficients of the nodal spectral function by quadrature (no closed form
// is used), which makes it an independent bracketing oracle for the
// theta-route nodal bounds.

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "riesz/errors.hpp"
#include "riesz/quadrature.hpp"
#include "riesz/systems.hpp"

namespace riesz {

struct gram_summary {
    generator_spec spec;
    int n;
    double lambda_min;
    double lambda_max;
    /// False when lambda_min sits at or below the dense-solver noise floor
    /// (~ n eps lambda_max), i.e. the reported minimum is only an upper bound.
    bool min_reliable;
};

namespace detail {

inline void check_section_size(int n, int limit = 401) {
    if (n < 3 || n % 2 == 0 || n > limit)
        throw std::invalid_argument("gram: n must be odd, 3 <= n <= 401");
}

inline gram_summary eigen_extremes(const generator_spec& spec, const Eigen::MatrixXd& m) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw convergence_error("gram: eigenvalue iteration failed", 0.0);
    const double lo = solver.eigenvalues()(0);
    const double hi = solver.eigenvalues()(m.rows() - 1);
    const double floor = 64 * m.rows() * std::numeric_limits<double>::epsilon() * std::abs(hi);
    return {spec, int(m.rows()), lo, hi, lo > floor};
}

}  // namespace detail

/// Closed-form Gram entry <phi, phi(. - m)>.
inline double gram_entry(const generator_spec& g, int m) {
    const double s = g.sigma;
    if (g.fam == family::gauss)
        return s * std::sqrt(std::numbers::pi) * std::exp(-double(m) * m / (4 * s * s));
    return 2 * std::numbers::pi * s * s * s / (4 * s * s + double(m) * m);
}

inline Eigen::MatrixXd gram_matrix(const generator_spec& g, int n) {
    detail::check_section_size(n);
    Eigen::MatrixXd m(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k <= j; ++k) m(j, k) = m(k, j) = gram_entry(g, j - k);
    return m;
}

inline gram_summary gram_eigen_bounds(const generator_spec& g, int n) {
    return detail::eigen_extremes(g, gram_matrix(g, n));
}

/// Gram section of the nodal system. Entries are
/// (1/pi) Integral_0^pi P~(w) cos(m w) dw, by adaptive quadrature.
inline Eigen::MatrixXd nod_gram_matrix(const generator_spec& g, int n, double tol = 1e-12) {
    detail::check_section_size(n);
    Eigen::MatrixXd m(n, n);
    std::vector<double> entry(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        entry[size_t(j)] = adaptive_quadrature(
                               [&g, j](double w) { return nod_spectral_p(g, w) * std::cos(j * w); },
                               0.0, std::numbers::pi, tol) /
                           std::numbers::pi;
    }
    for (int j = 0; j < n; ++j)
        for (int k = 0; k <= j; ++k) m(j, k) = m(k, j) = entry[size_t(j - k)];
    return m;
}

inline gram_summary nod_gram_eigen_bounds(const generator_spec& g, int n, double tol = 1e-12) {
    return detail::eigen_extremes(g, nod_gram_matrix(g, n, tol));
}

}  // namespace riesz
