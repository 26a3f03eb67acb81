#!/usr/bin/env python3
"""Regenerate reference_values.h.

All expected values used by the C++ test suite as an implementation-independent
oracle are computed here with mpmath (50..300 decimal digits) and frozen into a
header. Arguments are taken as exact binary64 values so the C++ side can compare
at close to machine precision.

Usage: python3 generate_reference_values.py > reference_values.h
"""
import math
import sys

from mpmath import (mp, mpf, jtheta, exp, sqrt, pi, sinh, cosh, tanh, log,
                    quad, cos, sin, fabs, fsum)


def d(x):
    """Exact binary64 -> mpf."""
    return mpf(float(x))


def fmt(x):
    """mpf -> shortest round-trip double literal."""
    return repr(float(x))


def lorentz_coeff(k, s):
    integral = quad(lambda t: cos(k * t) / cosh(s * t), [0, pi], maxdegree=10)
    return (-1) ** k * sinh(s * pi) / (s * pi ** 2) * integral


def gauss_coeff_table(s, kmax):
    # C(sigma), two-sided
    c = mpf(0)
    for r in range(-200, 201):
        c += (4 * r + 1) * exp(-(2 * r + mpf('0.5')) ** 2 / (2 * s * s))
    out = []
    for k in range(0, kmax + 1):
        acc = mpf(0)
        r = k
        while True:
            term = (-1) ** r * exp(-((r + mpf('0.5')) ** 2 - k * k) / (2 * s * s))
            acc += term
            if abs(term) < mpf('1e-60') and r > k + 8:
                break
            r += 1
        out.append(acc / c)
    return out


def phi(fam, t, s):
    if fam == 'G':
        return exp(-t * t / (2 * s * s))
    return s * s / (s * s + t * t)


def nod_residual(fam, s, kmax, mmax, coeffs):
    worst = mpf(0)
    for m in range(0, mmax + 1):
        val = coeffs[0] * phi(fam, m, s) + fsum(
            coeffs[k] * (phi(fam, m - k, s) + phi(fam, m + k, s))
            for k in range(1, kmax + 1))
        worst = max(worst, fabs(val - (1 if m == 0 else 0)))
    return worst


def main():
    out = sys.stdout
    out.write("// Generated by generate_reference_values.py -- do not edit.\n")
    out.write("#pragma once\n\n")
    out.write("namespace fixtures {\n\n")

    # ---- theta values ----------------------------------------------------
    # (dps high enough for the ~110-digit cancellation at q=0.99, t=pi/2)
    mp.dps = 330
    qs = [0.05, 0.3, 0.5, 0.7, 0.9, 0.95, 0.99,
          math.exp(-0.25), math.exp(-0.5), math.exp(-0.01), math.exp(-0.02)]
    ts = [0.0, 0.3, 1.0, math.pi / 2, 2.5, math.pi, -1.3, 7.7]
    out.write("struct ThetaFixture { int fn; double t; double q; double value; };\n")
    out.write("inline constexpr ThetaFixture kThetaValues[] = {\n")
    for fn in (1, 2, 3, 4):
        for q in qs:
            for t in ts:
                v = mpf(0) if (fn == 1 and t == 0.0) else jtheta(fn, d(t), d(q))
                out.write(f"    {{{fn}, {fmt(t)}, {fmt(q)}, {fmt(v)}}},\n")
    out.write("};\n\n")

    # ---- p ratio ----------------------------------------------------------
    out.write("struct PRatioFixture { double t; double q; double value; };\n")
    out.write("inline constexpr PRatioFixture kPRatioValues[] = {\n")
    for q in (0.3, 0.6, 0.9, math.exp(-0.25), math.exp(-0.01)):
        for t in (0.3, 1.0, math.pi / 2, 2.0, 2.9):
            v = jtheta(3, d(t), d(q)) / jtheta(3, d(t), d(q) ** 2) ** 2
            out.write(f"    {{{fmt(t)}, {fmt(q)}, {fmt(v)}}},\n")
    out.write("};\n\n")

    # ---- nodal coefficients ------------------------------------------------
    mp.dps = 50
    out.write("struct NodCoeffFixture { double sigma; int k; double value; };\n")
    out.write("inline constexpr NodCoeffFixture kGaussNodCoeffs[] = {\n")
    for sv in (0.5, 1.0, 2.0, 3.0):
        tab = gauss_coeff_table(d(sv), 10)
        for k in range(0, 11):
            out.write(f"    {{{fmt(sv)}, {k}, {fmt(tab[k])}}},\n")
    out.write("};\n\n")
    out.write("inline constexpr NodCoeffFixture kLorentzNodCoeffs[] = {\n")
    for sv in (0.5, 1.0, 2.0, 3.0):
        for k in range(0, 11):
            out.write(f"    {{{fmt(sv)}, {k}, {fmt(lorentz_coeff(k, d(sv)))}}},\n")
    out.write("};\n\n")

    # ---- nod-property residuals (kmax=40, |m|<=10) --------------------------
    out.write("struct NodResidualFixture { char family; double sigma; double residual; };\n")
    out.write("inline constexpr NodResidualFixture kNodResidual40[] = {\n")
    for fam in ('G', 'L'):
        for sv in (0.5, 1.0, 2.0, 3.0):
            s = d(sv)
            coeffs = (gauss_coeff_table(s, 40) if fam == 'G'
                      else [lorentz_coeff(k, s) for k in range(0, 41)])
            r = nod_residual(fam, s, 40, 10, coeffs)
            out.write(f"    {{'{fam}', {fmt(sv)}, {fmt(r)}}},\n")
    out.write("};\n\n")

    # ---- nod function at t=3, kmax=30, sigma=1 ------------------------------
    out.write("inline constexpr double kNodEvalT3[2] = {  // [0]=gauss, [1]=lorentz\n")
    for fam in ('G', 'L'):
        s = mpf(1)
        coeffs = (gauss_coeff_table(s, 30) if fam == 'G'
                  else [lorentz_coeff(k, s) for k in range(0, 31)])
        val = coeffs[0] * phi(fam, 3, s) + fsum(
            coeffs[k] * (phi(fam, 3 - k, s) + phi(fam, 3 + k, s)) for k in range(1, 31))
        out.write(f"    {fmt(fabs(val))},\n")
    out.write("};\n\n")

    # ---- mask duality, kmax=30, sigma=1, worst on 50-pt midpoint grid -------
    out.write("inline constexpr double kMaskDualityWorst30[2] = {  // [0]=gauss, [1]=lorentz\n")
    for fam in ('G', 'L'):
        s = mpf(1)
        coeffs = (gauss_coeff_table(s, 30) if fam == 'G'
                  else [lorentz_coeff(k, s) for k in range(0, 31)])
        worst = mpf(0)
        for i in range(50):
            t = 2 * pi * (i + mpf('0.5')) / 50
            dv = coeffs[0] + 2 * fsum(coeffs[k] * cos(k * t) for k in range(1, 31))
            if fam == 'G':
                ph = jtheta(3, t / 2, exp(-mpf('0.5')))
            else:
                ph = s * pi * cosh(s * (t - pi)) / sinh(s * pi)
            worst = max(worst, fabs(dv * ph - 1))
        out.write(f"    {fmt(worst)},\n")
    out.write("};\n\n")

    # ---- sinc distance -------------------------------------------------------
    out.write("struct SincDistanceFixture { double sigma; double value; };\n")
    out.write("inline constexpr SincDistanceFixture kSincDistance[] = {\n")
    for sv in (0.5, 1.0, 2.0, 5.0):
        s = d(sv)
        i1 = (1 - tanh(s * pi) / (2 * s * pi)) * tanh(s * pi)
        i2 = (1 - exp(-2 * s * pi)) * (1 + log((1 + exp(-2 * s * pi)) / 2) / (2 * s * pi))
        out.write(f"    {{{fmt(sv)}, {fmt(i1 - 2 * i2 + 1)}}},\n")
    out.write("};\n\n")

    # ---- nodal Riesz bounds ---------------------------------------------------
    mp.dps = 320
    out.write("struct NodalBoundsFixture { char family; double sigma; double lower; double upper; };\n")
    out.write("inline constexpr NodalBoundsFixture kNodalBounds[] = {\n")
    for sv in (1.0, 2.0, 3.0, 4.0, 5.0):
        s = d(sv)
        q = exp(-1 / (4 * s * s))
        at = s * sqrt(pi) * jtheta(3, pi / 2, q) / jtheta(3, pi / 2, q * q) ** 2
        bt = s * sqrt(pi) * jtheta(3, 0, q) / jtheta(3, 0, q * q) ** 2
        out.write(f"    {{'G', {fmt(sv)}, {fmt(at)}, {fmt(bt)}}},\n")
    for sv in (1.0, 2.0, 3.0, 4.0, 5.0):
        s = d(sv)
        at = sinh(s * pi) ** 2 / sinh(2 * s * pi)
        bt = at * (2 - 1 / cosh(s * pi) ** 2)
        out.write(f"    {{'L', {fmt(sv)}, {fmt(at)}, {fmt(bt)}}},\n")
    out.write("};\n\n")

    # ---- assorted scalars ------------------------------------------------------
    mp.dps = 50
    out.write("// integral of 1/cosh(t) over [0, pi]\n")
    out.write(f"inline constexpr double kIntSechZeroPi = {fmt(quad(lambda t: 1/cosh(t), [0, pi]))};\n\n")

    # interpolation example: lorentz sigma=3, kmax=40, samples sin(pi n/6), |n|<=20, t=2
    s = mpf(3)
    coeffs = [lorentz_coeff(k, s) for k in range(0, 41)]
    def nod_eval(t):
        return coeffs[0] * phi('L', t, s) + fsum(
            coeffs[k] * (phi('L', t - k, s) + phi('L', t + k, s)) for k in range(1, 41))
    approx = fsum(sin(pi * n / 6) * nod_eval(2 - n) for n in range(-20, 21))
    err = fabs(approx - sin(pi * mpf(2) / 6))
    out.write("// interpolation error at t=2: lorentz sigma=3 kmax=40, samples sin(pi n/6) on |n|<=20\n")
    out.write(f"inline constexpr double kInterpSinError = {fmt(err)};\n\n")

    out.write("}  // namespace fixtures\n")


if __name__ == "__main__":
    main()
