#pragma once

// Printed constants the pipelines are compared against. Expressions use the
// parse_class syntax; f1..f4 stand for the Chern classes of V1.

namespace jetcalc::reference {

inline constexpr const char* kRel1 = "a1^3 - 2*a1^2*c1 + a1*c1^2 + a1*c2 - c1*c2 + c3";

inline constexpr const char* kRel2 =
    "-d1^6 + 3*d1^5*f1 - 3*d1^4*f1^2 - 2*d1^4*f2 + 4*d1^3*f2*f1 + d1^3*f1^3 - f3*d1^2*f1"
    " - f2^2*d1^2 + 4*d1^2*f4 - 2*d1^2*f1^2*f2 + f3*d1*f1^2 - 4*d1*f4*f1 + f2^2*d1*f1"
    " - f3*f2*f1 + f3^2 + f4*f1^2";

inline constexpr const char* kRel3 =
    "-d1^5 - f3*f2 + 3*f4*f1 + f3*f1^2 - 2*d2*f3 - 2*d2*f1*f2 - d2*f1^3 + 5*f1*d2^2"
    " + 4*d1*f4 + d1*f2^2 + f3*f1*d1 - d1*f2*f1^2 - 4*f2*d2*d1 + 4*d2*f1^2*d1 + f3*d1^2"
    " - 2*d1^2*f2*f1 + f1^3*d1^2";

inline constexpr const char* kChernV1[4] = {
    "2*c1 - 2*a1",
    "c1^2 - 3*c1*a1 + a1^2 + 2*c2",
    "-c1^2*a1 + c1*a1^2 + 2/3*a1^3 + 2*c1*c2 - 2*c2*a1 - 2*c1*a2 + 2*c3",
    "-c3*a1 - 6*a1^2*a2 + c2*a1^2 - c1^2*a2 - 6*c2*a2 + 4*c1*c3 + 1/3*c1*a1^3 + 1/2*c1^4"
    " - 2*c1^2*c2 + 2*c2^2 + 6*a2^2 + 2/3*a1^4 - c1*c2*a1 + 4*a1*c1*a2",
};

inline constexpr const char* kMorseForm = "112896000*h^2*c1 + 280000*c1*c2 - 70000*c3 - 449003520*h^3 - 1050000*c1^3";

// coefficients of d^4, d^3, d^2, d, constant
inline constexpr long kMorseQuartic[5] = {840000, -13300000, -43246000, -2473520, 0};
inline constexpr long kMorseThreshold = 19;

// alpha(d, delta): (d power, delta power, coefficient)
struct AlphaTerm {
    int dpow;
    int deltapow;
    long coeff;
};
inline constexpr AlphaTerm kAlpha[8] = {
    {4, 1, -742000}, {1, 1, -36400}, {3, 1, 1862000}, {2, 0, -43246000},
    {3, 0, -13300000}, {4, 0, 840000}, {2, 1, 9247280}, {1, 0, -2473520},
};
inline constexpr long kEffectiveBound = 93;
inline constexpr long kDegeneracyPoles = 84;  // 7 * 12

inline constexpr long kCramerOrder = 7;

}  // namespace jetcalc::reference
