#include "riesz/nodal.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "fixtures/reference_values.h"
#include "riesz/oracle.hpp"

namespace {

using riesz::coefficient_tail_envelope;
using riesz::family;
using riesz::first_sign_alternation_break;
using riesz::gauss_nod_coefficients;
using riesz::generator_spec;
using riesz::generator_value;
using riesz::interpolate;
using riesz::lorentz_nod_coefficients;
using riesz::mask_phi;
using riesz::nod_coefficients;
using riesz::nod_function_eval;
using riesz::sinc;
using riesz::sinc_distance_closed_form;

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

nod_coefficients make_coeffs(char fam, double sigma, int kmax) {
    return fam == 'G' ? gauss_nod_coefficients(sigma, kmax)
                      : lorentz_nod_coefficients(sigma, kmax);
}

// Double-precision noise floor of the truncated nod sum at integer m: the
// stored coefficients carry eps-relative rounding, so delta_{0m} can only be
// reproduced to ~ eps * sum |d_k phi(m-k)|.
double eval_noise_floor(const nod_coefficients& c, int m) {
    double mass = std::abs(c.at(0) * generator_value(c.spec, m));
    for (int k = 1; k <= c.kmax; ++k)
        mass += std::abs(c.at(k)) *
                (generator_value(c.spec, m - k) + generator_value(c.spec, m + k));
    return 8 * kEps * mass;
}

TEST(NodCoefficients, MatchFrozenReference) {
    for (char fam : {'G', 'L'}) {
        const auto* table = fam == 'G' ? fixtures::kGaussNodCoeffs : fixtures::kLorentzNodCoeffs;
        for (double sigma : {0.5, 1.0, 2.0, 3.0}) {
            const auto coeffs = make_coeffs(fam, sigma, 10);
            for (int i = 0; i < 44; ++i) {
                const auto& fx = table[i];
                if (fx.sigma != sigma) continue;
                EXPECT_NEAR(coeffs.at(fx.k) / fx.value, 1.0, 1e-11)
                    << fam << " sigma=" << sigma << " k=" << fx.k;
            }
        }
    }
}

TEST(NodCoefficients, StorageAndSymmetry) {
    for (char fam : {'G', 'L'}) {
        const auto c = make_coeffs(fam, 1.0, 12);
        EXPECT_EQ(c.values.size(), 25u);
        for (int k = 1; k <= 12; ++k) EXPECT_EQ(c.at(-k), c.at(k));
    }
}

TEST(NodCoefficients, GaussSignsAlternateThroughout) {
    for (double sigma : {0.5, 1.0, 2.0, 3.0}) {
        const auto c = gauss_nod_coefficients(sigma, 40);
        EXPECT_GT(c.at(0), 0.0);
        EXPECT_EQ(first_sign_alternation_break(c), std::nullopt) << "sigma=" << sigma;
    }
}

// Lorentz alternation is only a small-|k| phenomenon: the tail has constant
// sign (~ -(1 - e^{-2 s pi})/(pi^2 k^2)), so the break is reported, not hidden.
TEST(NodCoefficients, LorentzSignPatternBreaks) {
    const auto c1 = lorentz_nod_coefficients(1.0, 40);
    const auto brk = first_sign_alternation_break(c1);
    ASSERT_TRUE(brk.has_value());
    EXPECT_EQ(*brk, 6);            // d5 and d6 are both negative at sigma = 1
    EXPECT_GT(c1.at(0), 0.0);
    EXPECT_LT(c1.at(1), 0.0);      // alternation does hold initially
    EXPECT_LT(c1.at(40), 0.0);     // constant-sign tail
    EXPECT_NEAR(c1.at(40) * 40 * 40, -(1 - std::exp(-2 * kPi)) / (kPi * kPi), 5e-3);
}

TEST(NodCoefficients, TailRatioConditioningFlag) {
    EXPECT_TRUE(gauss_nod_coefficients(0.5, 20).well_truncated());
    // slow geometric decay e^{-k/18}: |d_40|/|d_0| ~ 0.1 at sigma = 3
    const auto g3 = gauss_nod_coefficients(3.0, 40);
    EXPECT_FALSE(g3.well_truncated());
    EXPECT_NEAR(g3.tail_ratio(), 0.2085, 0.005);
}

TEST(NodCoefficients, GaussConditioningErrorAtExtremeSigma) {
    // C(sigma) ~ 2 sqrt(2 pi) pi s^3 e^{-s^2 pi^2/2} underflows near s = 12
    EXPECT_THROW(gauss_nod_coefficients(12.5, 4), riesz::conditioning_error);
}

TEST(NodCoefficients, ArgumentErrors) {
    EXPECT_THROW(gauss_nod_coefficients(1.0, 0), std::domain_error);
    EXPECT_THROW(lorentz_nod_coefficients(-1.0, 10), std::domain_error);
    EXPECT_THROW(lorentz_nod_coefficients(1.0, 10, -1e-12), std::domain_error);
}

// max_{|m|<=10} |phi~(m) - delta_{0m}| at kmax=40 against the 50-digit truth,
// allowing the double-precision noise floor where the truth sits below it.
TEST(NodProperty, ResidualsTrackFrozenTruth) {
    for (const auto& fx : fixtures::kNodResidual40) {
        const auto coeffs = make_coeffs(fx.family, fx.sigma, 40);
        double worst = 0;
        double floor = 0;
        for (int m = -10; m <= 10; ++m) {
            const double want = m == 0 ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(nod_function_eval(coeffs, m) - want));
            floor = std::max(floor, eval_noise_floor(coeffs, m));
        }
        const double quad_err = fx.family == 'L' ? 50 * coeffs.quadrature_tolerance : 0.0;
        EXPECT_LE(worst, std::max(1.05 * fx.residual + quad_err, floor))
            << fx.family << " sigma=" << fx.sigma;
    }
}

TEST(NodProperty, GaussExampleKmax20) {
    const auto coeffs = gauss_nod_coefficients(1.0, 20);
    for (int m = -8; m <= 8; ++m) {
        const double want = m == 0 ? 1.0 : 0.0;
        EXPECT_NEAR(nod_function_eval(coeffs, m), want, 1e-8) << "m=" << m;
    }
}

TEST(NodFunction, ValueAtZeroAndFarInteger) {
    for (char fam : {'G', 'L'}) {
        const auto coeffs = make_coeffs(fam, 1.0, 30);
        EXPECT_NEAR(nod_function_eval(coeffs, 0.0), 1.0, 3e-6);
        // t = 3: Gauss is ~1e-50 there; Lorentz is truncation-limited at 2.4e-6
        const double at3 = std::abs(nod_function_eval(coeffs, 3.0));
        if (fam == 'G') {
            EXPECT_LE(at3, 1e-6);
        } else {
            EXPECT_NEAR(at3, fixtures::kNodEvalT3[1], 0.02 * fixtures::kNodEvalT3[1]);
        }
    }
}

TEST(NodFunction, EvenInArgument) {
    for (char fam : {'G', 'L'}) {
        const auto coeffs = make_coeffs(fam, 2.0, 25);
        for (double t : {0.3, 1.7, 4.4}) {
            EXPECT_NEAR(nod_function_eval(coeffs, -t), nod_function_eval(coeffs, t), 1e-12);
        }
    }
}

// Time-domain evaluation against the frequency-domain route: phi~_L has
// Fourier image F[phi_L](w)/Phi_L(w), inverted here by quadrature.
TEST(NodFunction, LorentzMatchesFourierInversion) {
    const double sigma = 2.0, t = 0.5;
    const generator_spec g{family::lorentz, sigma};
    const auto coeffs = lorentz_nod_coefficients(sigma, 400);
    const double time_side = nod_function_eval(coeffs, t);

    double freq_side = 0;  // (2/sqrt(2 pi)) Integral_0^cut image(w)/Phi(w) cos(wt) dw
    const double cut = 24.0;
    for (double a = 0; a < cut; a += kPi) {
        freq_side += riesz::adaptive_quadrature(
            [&](double w) { return riesz::fourier_image(g, w) / mask_phi(g, w) * std::cos(w * t); },
            a, std::min(a + kPi, cut), 1e-11);
    }
    freq_side *= 2 / std::sqrt(2 * kPi);
    EXPECT_NEAR(time_side, freq_side, 1e-4);
}

TEST(NodFunction, MaskDualityWithinTruncationBound) {
    for (char fam : {'G', 'L'}) {
        const auto coeffs = make_coeffs(fam, 1.0, 30);
        const double envelope = coefficient_tail_envelope(coeffs);
        double worst = 0;
        for (int i = 0; i < 50; ++i) {
            const double t = 2 * kPi * (i + 0.5) / 50;
            double mask = coeffs.at(0);
            for (int k = 1; k <= 30; ++k) mask += 2 * coeffs.at(k) * std::cos(k * t);
            const double phi = mask_phi(coeffs.spec, t);
            const double residual = std::abs(mask * phi - 1.0);
            EXPECT_LE(residual, phi * envelope) << fam << " t=" << t;
            worst = std::max(worst, residual);
        }
        // pinned worst-case from the 50-digit oracle on the same grid
        const double frozen = fixtures::kMaskDualityWorst30[fam == 'G' ? 0 : 1];
        EXPECT_NEAR(worst / frozen, 1.0, 0.02) << fam;
    }
}

TEST(Interpolate, DeltaSamplesReduceToNodFunction) {
    const auto coeffs = lorentz_nod_coefficients(1.0, 30);
    const std::map<int, double> samples{{0, 1.0}};
    EXPECT_NEAR(interpolate(coeffs, samples, 0.0), 1.0, 3e-6);
    EXPECT_EQ(interpolate(coeffs, samples, 0.25), nod_function_eval(coeffs, 0.25));
}

TEST(Interpolate, ConstantSamplesReproduced) {
    const auto coeffs = gauss_nod_coefficients(1.0, 30);
    std::map<int, double> samples;
    for (int n = -15; n <= 15; ++n) samples[n] = 2.5;
    EXPECT_NEAR(interpolate(coeffs, samples, 3.0), 2.5, 2.5 * 31 * 1e-8);
}

TEST(Interpolate, SineSamplesAtInteriorNode) {
    const auto coeffs = lorentz_nod_coefficients(3.0, 40);
    std::map<int, double> samples;
    for (int n = -20; n <= 20; ++n) samples[n] = std::sin(kPi * n / 6);
    const double got = interpolate(coeffs, samples, 2.0);
    EXPECT_NEAR(got, std::sin(kPi / 3), 1e-4);
    EXPECT_NEAR(std::abs(got - std::sin(kPi / 3)), fixtures::kInterpSinError,
                0.05 * fixtures::kInterpSinError + 1e-9);
}

TEST(Interpolate, EmptySamplesRejected) {
    const auto coeffs = gauss_nod_coefficients(1.0, 10);
    EXPECT_THROW(interpolate(coeffs, {}, 0.0), std::invalid_argument);
}

TEST(Sinc, SpotValues) {
    EXPECT_EQ(sinc(0.0), 1.0);
    EXPECT_EQ(sinc(3.0), std::sin(3 * kPi) / (3 * kPi));
    EXPECT_NEAR(sinc(3.0), 0.0, 1e-15);
    EXPECT_NEAR(sinc(-7.0), 0.0, 1e-15);
    EXPECT_NEAR(sinc(0.5), 2 / kPi, 1e-16);
    // series branch continuous with the direct branch
    EXPECT_NEAR(sinc(9.9e-9), sinc(1.01e-8), 1e-15);
}

TEST(SincDistance, MatchesFrozenClosedForm) {
    for (const auto& fx : fixtures::kSincDistance) {
        EXPECT_NEAR(sinc_distance_closed_form(fx.sigma) / fx.value, 1.0, 1e-13)
            << "sigma=" << fx.sigma;
    }
}

TEST(SincDistance, DecreasesWithSigma) {
    EXPECT_GT(sinc_distance_closed_form(1.0), sinc_distance_closed_form(2.0));
    EXPECT_GT(sinc_distance_closed_form(2.0), sinc_distance_closed_form(5.0));
    EXPECT_GT(sinc_distance_closed_form(5.0), 0.0);
}

// Frequency-domain quadrature of || F[phi~_L] - F[sinc(pi .)] ||^2; the
// Fourier image of sinc(pi t) is (2 pi)^{-1/2} on [-pi, pi], zero outside.
double sinc_distance_by_quadrature(double sigma) {
    const generator_spec g{family::lorentz, sigma};
    const double box = 1 / std::sqrt(2 * kPi);
    auto image = [&](double w) { return riesz::fourier_image(g, w) / mask_phi(g, w); };
    double total = riesz::adaptive_quadrature(
        [&](double w) { const double d = image(w) - box; return d * d; }, 0.0, kPi, 1e-11);
    for (double a = kPi; a < 40 * kPi; a += kPi) {
        total += riesz::adaptive_quadrature([&](double w) { const double v = image(w); return v * v; },
                                            a, a + kPi, 1e-12);
    }
    return 2 * total;
}

TEST(SincDistance, ClosedFormAgreesWithQuadrature) {
    for (double sigma : {0.5, 1.0, 2.0}) {
        EXPECT_NEAR(sinc_distance_closed_form(sigma), sinc_distance_by_quadrature(sigma), 1e-8)
            << "sigma=" << sigma;
    }
}

TEST(SincDistance, RejectsBadSigma) {
    EXPECT_THROW(sinc_distance_closed_form(0.0), std::domain_error);
    EXPECT_THROW(sinc_distance_closed_form(-2.0), std::domain_error);
}

}  // namespace
