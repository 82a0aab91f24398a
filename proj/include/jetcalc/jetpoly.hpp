#pragma once

#include "jetcalc/ring.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jetcalc {

using Alpha = std::array<int, 4>;

// Variable inventory of the affine chart: z_j, a_alpha (alpha != (d,0,0,0)),
// xi_j^{(i)} and xi_j^{(i,l)}.
class JetVars {
public:
    explicit JetVars(int d);

    int d() const { return d_; }
    int count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int id) const { return names_.at(id); }

    int z(int j) const;                 // j = 1..4
    int xi(int i, int j) const;         // i = 1, 2
    int xi2(int i, int l, int j) const; // 1 <= i <= l <= 2
    int a(const Alpha& alpha) const;    // -1 for the fixed leading coefficient
    bool is_a(int id) const { return id >= a_begin_ && id < a_end_; }
    bool is_z(int id) const { return id < 4; }
    bool is_xi(int id) const { return id >= 4 && id < 12; }
    bool is_xi2(int id) const { return id >= 12 && id < 24; }
    const Alpha& alpha_of(int id) const { return a_alpha_.at(id - a_begin_); }

    const std::vector<Alpha>& alphas() const { return alphas_; }  // every |alpha| <= d
    Alpha leading() const { return {d_, 0, 0, 0}; }

private:
    int d_;
    std::vector<std::string> names_;
    std::vector<Alpha> alphas_;
    std::vector<Alpha> a_alpha_;
    std::map<Alpha, int> a_index_;
    int a_begin_ = 0, a_end_ = 0;
};

using JetMono = std::vector<std::pair<std::uint16_t, std::uint16_t>>;  // (variable, exponent), sorted

class JetPoly {
public:
    JetPoly() = default;

    static JetPoly constant(const Scalar& c);
    static JetPoly var(int id, int power = 1);

    const std::map<JetMono, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    void add_term(const JetMono& m, const Scalar& c);
    Scalar coeff(const JetMono& m) const;

    JetPoly derivative(int id) const;
    std::string str(const JetVars& v) const;

    bool operator==(const JetPoly& o) const { return terms_ == o.terms_; }

private:
    std::map<JetMono, Scalar> terms_;
};

JetMono mono_mul(const JetMono& a, const JetMono& b);
int mono_exponent(const JetMono& m, int id);

JetPoly operator+(const JetPoly& x, const JetPoly& y);
JetPoly operator-(const JetPoly& x, const JetPoly& y);
JetPoly operator*(const JetPoly& x, const JetPoly& y);
JetPoly operator*(const Scalar& c, const JetPoly& x);

// z^alpha
JetPoly z_power(const JetVars& v, const Alpha& alpha);

struct VectorFieldSym {
    std::map<int, JetPoly> components;  // variable -> coefficient of d/d(variable)

    void add(int id, const JetPoly& c);
    std::size_t term_count() const { return components.size(); }
};

// derivation action sum_v c_v * d f / d v
JetPoly apply_field(const VectorFieldSym& V, const JetPoly& f);

}  // namespace jetcalc
