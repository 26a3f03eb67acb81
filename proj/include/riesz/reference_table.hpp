#pragma once

// Published reference values of the Riesz constants for the eight standard
// widths, as printed in the source table (columns A_G, B_G, B_G/A_G, A_L,
// B_L, B_L/A_L), together with a comparator that works at the precision each
// cell is displayed with.
//
// A printed cell passes when the computed value differs by at most one unit
// in the last displayed significant digit; that accommodates both rounding
// and truncation in the published digits (two of the ratio cells are
// truncated rather than rounded).
//
// One cell is a documented erratum: A_G at sigma = 1.0 is printed as 6.45e-4,
// which contradicts the same row's printed B_G = 6.283 and B_G/A_G = 9.67e3
// (those force A_G = 6.50e-4) as well as the defining closed form
// sigma sqrt(pi) theta3(pi/2, e^{-1/4}) = 4 pi e^{-pi^2} = 6.49973e-4.
// Comparisons for that cell use the corrected value; the printed one is kept
// for display.

#include <array>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

namespace riesz::reference {

struct table_row {
    double sigma;
    // printed strings: A_G, B_G, B_G/A_G, A_L, B_L, B_L/A_L
    std::array<const char*, 6> printed;
};

inline constexpr table_row kRieszConstantTable[8] = {
    {0.2, {"0.353", "0.356", "1.01", "0.245", "0.464", "1.90"}},
    {0.4, {"0.415", "1.009", "2.43", "0.258", "1.600", "6.21"}},
    {0.6, {"0.130", "2.262", "17.46", "0.164", "3.557", "21.70"}},
    {1.0, {"6.45e-4", "6.283", "9.67e3", "0.037", "9.870", "267.75"}},
    {2.0, {"3.60e-16", "25.13", "6.98e16", "2.75e-4", "39.48", "1.43e5"}},
    {3.0, {"3.00e-37", "56.55", "1.88e38", "1.16e-6", "88.83", "7.68e7"}},
    {4.0, {"5.28e-67", "100.53", "1.91e68", "3.84e-9", "157.91", "4.11e10"}},
    {5.0, {"2.18e-105", "157.08", "7.19e106", "1.12e-11", "246.74", "2.20e13"}},
};

struct erratum_info {
    int row;    ///< index into kRieszConstantTable
    int col;    ///< column index
    const char* printed;
    const char* corrected;
    const char* note;
};

inline constexpr erratum_info kTableErratum = {
    3, 0, "6.45e-4", "6.50e-4",
    "printed A_G(1.0) contradicts the printed B_G and B_G/A_G of the same row; "
    "comparison uses the value implied by them and by the closed form"};

/// Printed-string value together with one unit in its last displayed
/// significant digit.
struct displayed_value {
    double value;
    double unit_last_digit;
};

inline displayed_value parse_displayed(const char* printed) {
    const std::string s(printed);
    const double value = std::strtod(s.c_str(), nullptr);
    const auto epos = s.find_first_of("eE");
    const std::string mant = epos == std::string::npos ? s : s.substr(0, epos);
    const int exp10 = epos == std::string::npos ? 0 : std::atoi(s.c_str() + epos + 1);

    // place of the last digit of the mantissa relative to its decimal point
    int frac_digits = 0;
    const auto dot = mant.find('.');
    if (dot != std::string::npos) {
        for (std::size_t i = dot + 1; i < mant.size(); ++i)
            if (std::isdigit(static_cast<unsigned char>(mant[i]))) ++frac_digits;
    }
    return {value, std::pow(10.0, exp10 - frac_digits)};
}

/// True when `computed` matches the printed cell to within one unit in the
/// last displayed digit.
inline bool matches_displayed(const char* printed, double computed) {
    const displayed_value d = parse_displayed(printed);
    return std::abs(computed - d.value) <= d.unit_last_digit * (1 + 1e-9);
}

/// Printed string the comparison should use for a given cell (the erratum
/// cell substitutes its corrected value).
inline const char* comparison_string(int row, int col) {
    if (row == kTableErratum.row && col == kTableErratum.col) return kTableErratum.corrected;
    return kRieszConstantTable[row].printed[size_t(col)];
}

}  // namespace riesz::reference
