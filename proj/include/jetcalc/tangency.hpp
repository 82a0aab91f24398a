#pragma once

#include "jetcalc/jetpoly.hpp"
#include "jetcalc/linsolve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jetcalc {

struct JetIdeal {
    JetVars vars;
    JetPoly P;                          // z1^d + sum a_alpha z^alpha
    std::vector<JetPoly> generators;    // P, g_1, g_2, g_11, g_12, g_22
    std::vector<std::string> labels;
};

JetIdeal build_jet_ideal(int d);

// coefficient of the directional derivative sum_j dP/dz_j x_j
JetPoly first_order(const JetVars& v, const JetPoly& P, int i);
JetPoly second_order(const JetVars& v, const JetPoly& P, int i, int l);

struct CoefficientField {
    std::string type;  // "300", "210", "111"
    Alpha pattern;     // exponents e of prod (1 - t_j)^{e_j}
    Alpha alpha;
    VectorFieldSym field;
};

// sum_{s <= e} prod binom(e_j, s_j) (-1)^{|s|} z^s d/da_{alpha - s}; drop_last omits s = e
VectorFieldSym pattern_field(const JetVars& v, const Alpha& pattern, const Alpha& alpha, bool drop_last = false);
std::vector<Alpha> field_patterns(const std::string& type);
std::vector<CoefficientField> coefficient_fields(const JetVars& v);

struct TangencyReport {
    std::vector<JetPoly> images;  // V(g) per generator
    bool tangent() const;
    std::vector<bool> zero() const;
};

TangencyReport check_tangency(const VectorFieldSym& V, const JetIdeal& ideal);

using Matrix4 = std::array<std::array<Scalar, 4>, 4>;

// w^{(k)} = A xi^{(k)}, w^{(i,k)} = A xi^{(i,k)}
VectorFieldSym xi_field(const JetVars& v, const Matrix4& A);

struct AFieldResult {
    bool feasible = false;
    VectorFieldSym field;                 // v_alpha parts plus the xi part
    int unknowns_per_block = 0;           // (alpha, beta) pairs, shared by every a-degree block
    int equations = 0;
    int rank = 0;
    std::optional<std::pair<std::size_t, Scalar>> certificate;
};

AFieldResult solve_A_field(const Matrix4& A, const JetIdeal& ideal);

struct CramerEntry {
    Alpha alpha;
    int unknown;          // 0: v_0000, 1: v_1000, 2: v_0100
    JetPoly numerator;
    int max_z = 0, max_xi = 0, max_eta = 0, max_total = 0;
    bool profile_ok = true;
};

struct CramerReport {
    JetPoly denominator;
    bool denominator_is_W12 = false;
    bool identity_ok = false;  // M N + W12 r = 0 for every alpha
    std::vector<CramerEntry> entries;
    int max_numerator_degree = 0;
    int first_package_order = 3;
    int order = 0;
    bool profiles_ok = false;
};

// system in v_0000, v_1000, v_0100 for the pair (i, l), the remaining |alpha| <= 2 on the right
CramerReport cramer_pole_audit(int d, int i = 1, int l = 1);

// all 2x2 minors of (x, y) vanish
bool sigma_locus(const std::array<Scalar, 4>& x, const std::array<Scalar, 4>& y);

}  // namespace jetcalc
