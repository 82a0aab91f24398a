#pragma once

#include "jetcalc/charclass.hpp"
#include "jetcalc/ring.hpp"

#include <string>
#include <vector>

namespace jetcalc {

struct TowerLevel {
    int index = 0;
    int p = 0;
    int rank = 0;
    int fiber_level = 0;
    BundleData V;
    std::vector<GradedClass> sub;       // a_1..a_p
    std::vector<GradedClass> quot;      // b_0..b_{r-p}
    std::vector<GradedClass> vanishing; // b_{r-p+1}..b_r before completion
    std::vector<RewriteRule> relations; // completed rule set, fiber-pure leads
    int fiber_dim = 0;
    GradedClass u;
    std::vector<Monomial> basis;        // standard fiber monomials
    Monomial top{};
    Scalar norm;
    Ring ring;                          // base rules plus this level's rules

    bool is_fiber_monomial(const Monomial& m) const;
    Monomial fiber_part(const Monomial& m) const;
};

// quotient classes, vanishing conditions, rule completion over the fiber generators,
// module basis and the normalized top-class functional
TowerLevel grassmann_level(const Ring& base, const BundleData& V, int p,
                           const std::vector<std::string>& sub_names, int index = 1);

GradedClass fiber_integrate(const TowerLevel& level, const GradedClass& x);

// Sum_i a_i b_{k-i} - c_k(V) in normal form, k = 1..r
std::vector<GradedClass> whitney_residuals(const TowerLevel& level);

// the eliminated relation whose leading monomial is a pure power of a_1
GradedClass eliminated_relation(const TowerLevel& level);

// Printed: ch(S1) kept to degree 2 and ch(V0) to degree 3 before combining, as in the
// displayed ch(V1). Full: every component kept.
enum class V1Convention { Printed, Full };
std::string to_string(V1Convention c);

struct Tower {
    HypersurfaceData X;
    TablePtr table;
    TablePtr free_table;
    Ring base;
    BundleData V0;
    TowerLevel L1;
    BundleData V1_free;  // in free_table, no relations applied
    BundleData V1;       // normalized in L1.ring
    TowerLevel L2;
    V1Convention convention = V1Convention::Printed;

    const Ring& ring() const { return L2.ring; }
    GradedClass gen(std::string_view n) const { return GradedClass::generator(table, n); }
    GradedClass u1() const { return L1.u; }
    GradedClass u2() const { return L2.u; }
    // pushforward of a top-degree class to the base threefold
    GradedClass push_to_base(const GradedClass& x) const;
    Scalar integrate_numeric(const GradedClass& x) const;
};

TablePtr tower_table(bool symbolic);
Tower build_tower_symbolic(V1Convention conv = V1Convention::Printed);
Tower build_tower(long d, V1Convention conv = V1Convention::Printed);
Tower build_tower_from(const HypersurfaceData& X, V1Convention conv);

BundleData compute_V1(const TablePtr& free_table, const BundleData& V0_free, V1Convention conv);

// Z2 = u2 + u1 + c1
GradedClass z2_class(const Tower& t);

// total pushforward; symbolic towers return a degree-3 class in h, c1, c2, c3
GradedClass integrate_total(const Tower& t, const GradedClass& x);

long dim_Xk(long n, long r, long p, long k);
long rank_Vk(long r, long p, long k);
long binomial(long n, long k);

}  // namespace jetcalc
