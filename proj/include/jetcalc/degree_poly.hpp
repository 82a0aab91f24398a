#pragma once

#include "jetcalc/ring.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace jetcalc {

// Exact polynomial in d, at most linear in delta. Keys are (power of d, power of delta).
class DegreePoly {
public:
    DegreePoly() = default;

    static DegreePoly constant(const Scalar& c);
    static DegreePoly d();
    static DegreePoly delta();

    const std::map<std::pair<int, int>, Scalar>& coefficients() const { return coef_; }
    Scalar coeff(int dpow, int deltapow = 0) const;
    void add_term(int dpow, int deltapow, const Scalar& c);
    bool is_zero() const { return coef_.empty(); }
    int degree_d() const;  // -1 for zero
    bool linear_in_delta() const;
    DegreePoly delta_part(int deltapow) const;

    Scalar eval(const Scalar& dv, const Scalar& deltav = 0) const;

    std::string str() const;
    bool operator==(const DegreePoly& o) const { return coef_ == o.coef_; }

private:
    std::map<std::pair<int, int>, Scalar> coef_;
};

DegreePoly operator+(const DegreePoly& a, const DegreePoly& b);
DegreePoly operator-(const DegreePoly& a, const DegreePoly& b);
DegreePoly operator*(const DegreePoly& a, const DegreePoly& b);
DegreePoly operator*(const Scalar& c, const DegreePoly& a);

// Exact Lagrange interpolation; points beyond degree_bound+1 must lie on the result.
DegreePoly interpolate(const std::vector<std::pair<Scalar, Scalar>>& points, int degree_bound);

}  // namespace jetcalc
