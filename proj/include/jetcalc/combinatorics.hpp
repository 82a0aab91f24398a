#pragma once

#include "jetcalc/degree_poly.hpp"
#include "jetcalc/ring.hpp"

#include <vector>

namespace jetcalc {

using MultiIndex = std::vector<int>;

// I_l = {i in N^p : |i| = l}, lexicographically increasing
std::vector<MultiIndex> index_set(int p, int l);

struct Slot {
    int l;
    MultiIndex i;
};

struct CompositionTable {
    int p = 0, k = 0, m = 0;
    std::vector<Slot> slots;               // all (l, i), l = 1..k
    std::vector<std::vector<int>> entries; // q per slot

    bool satisfies(const std::vector<int>& q) const;
};

CompositionTable enumerate_compositions(int p, int k, int m);

long long rank_EGG(int p, int k, int m, int n);
long long rank_EGG_bruteforce(int p, int k, int m, int n);

struct YoungShape {
    std::vector<int> lambda;

    // t_i = #{j : lambda_j >= i}, i = 1..lambda_1
    std::vector<int> column_heights() const;
};

void check_partition(const std::vector<int>& lambda);
Scalar schur_dim(const std::vector<int>& lambda, int r);
long long ssyt_count(const std::vector<int>& lambda, int r);
// weight vectors (content) of all SSYT of shape lambda with entries 1..r
std::vector<std::vector<int>> ssyt_weights(const std::vector<int>& lambda, int r);

bool br_vanishing(const YoungShape& shape, int n, int N);
bool order_k_vanishing(int p, int k, int n, int codim);

long long coefficient_space_dim(int d);

// weights, as multiples of the Chern roots of T_X, of the two models of Gamma^{(m,m,0)} T_X^*
std::vector<std::vector<int>> schur_weights_mm0(int m);
std::vector<std::vector<int>> sym_twist_weights_mm0(int m);
bool character_identity_holds(int m);

enum class EulerRoute { SchurWeights, SymTwist };

// degree-3 class in c1, c2, c3 of the symbolic hypersurface table
GradedClass euler_char_form(int m, EulerRoute route);
Scalar euler_char_mm0(long d, int m, EulerRoute route = EulerRoute::SchurWeights);

struct EulerLeading {
    DegreePoly chi;  // in the variable m, printed as d
    int degree = -1;
    Scalar leading;
    Scalar expected;  // (4c1^3 - 3c1c2 - c3)/120 integrated
    bool ok = false;
};

EulerLeading leading_coefficient_check(long d, int samples = 9, int bound = 6);

}  // namespace jetcalc
