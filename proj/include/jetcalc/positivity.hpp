#pragma once

#include "jetcalc/degree_poly.hpp"
#include "jetcalc/tower.hpp"

#include <optional>
#include <string>
#include <vector>

namespace jetcalc {

// Sum_j a_j u_j + h_twist * h + delta * K_X, with K_X = -c1. When delta_symbolic is
// set, delta is an indeterminate and delta_twist is ignored.
struct WeightTuple {
    std::vector<long> a;
    long h_twist = 0;
    Scalar delta_twist = 0;
    bool delta_symbolic = false;
};

std::vector<long> weight_to_b(const WeightTuple& w);
bool is_effective_weight(const WeightTuple& w);
WeightTuple operator+(const WeightTuple& x, const WeightTuple& y);

enum class NefVariant { A, B };

struct NefResult {
    WeightTuple weights;  // a_j is the weight of u_j
    long ell = 0;         // 2p(p^2+2)^{k-1}
};

NefResult nef_recursion(int p, int k, NefVariant variant);

// PerLevel puts a_j on u_j; Reversed puts a_j on u_{k+1-j}.
enum class UOrdering { PerLevel, Reversed };
std::string to_string(UOrdering o);
std::string weight_form(const WeightTuple& w, UOrdering o);

// class of the tuple on the top level; the symbolic delta part is returned separately
struct WeightClass {
    GradedClass fixed;
    GradedClass per_delta;
};
WeightClass weight_class(const Tower& t, const WeightTuple& w, UOrdering o);

struct MorseReport {
    WeightTuple F, G;
    UOrdering ordering = UOrdering::PerLevel;
    V1Convention convention = V1Convention::Printed;
    GradedClass chern_form;        // delta-free part, degree 3 on the base
    GradedClass chern_form_delta;  // coefficient of delta
    DegreePoly degree_poly;
    std::optional<long> threshold;
};

// Integral over the top level of (F^8 - 8 F^7 G) Z2, on a symbolic tower
MorseReport morse_quantity(const Tower& symbolic, const WeightTuple& F, const WeightTuple& G, UOrdering o);

// the same integral on a numeric tower, split as (delta^0, delta^1) parts
std::pair<Scalar, Scalar> morse_value(const Tower& numeric, const WeightTuple& F, const WeightTuple& G,
                                      UOrdering o);

// numeric evaluation at the sample degrees followed by exact interpolation in d
DegreePoly morse_interpolated(const WeightTuple& F, const WeightTuple& G, UOrdering o, V1Convention conv,
                              const std::vector<long>& samples, int degree_bound, bool parallel = true);

// least d >= 1 with poly > 0 at every integer >= d; the scan runs window past a Cauchy root bound
long threshold_search(const DegreePoly& poly, int window = 50);

struct BoundWitness {
    long d = 0;
    Scalar delta_min;  // kDegeneracyPoles / (d - 5)
    Scalar delta;      // a feasible delta > delta_min
    Scalar alpha_at_min;
    Scalar alpha_at_delta;
};

// exists delta > poles/(d-5) with alpha(d, delta) > 0; alpha must be linear in delta
bool bound_feasible(const DegreePoly& alpha, long d, long poles = 84, BoundWitness* witness = nullptr);
// least d >= 6 with bound_feasible on every integer of [d, d+window]
long effective_bound(const DegreePoly& alpha, long poles = 84, int window = 50);
// pole count minus vanishing order: poles*m - delta*m*(d-5) < 0
bool degeneracy_inequality(long d, const Scalar& delta, long m = 1, long poles = 84);

WeightTuple cor_weights();        // (5,1) with h twist 24
WeightTuple morse_g();            // 24h
WeightTuple alpha_g();            // 24h + delta K_X

}  // namespace jetcalc
