#include "jetcalc/degree_poly.hpp"

#include <sstream>

namespace jetcalc {

DegreePoly DegreePoly::constant(const Scalar& c)
{
    DegreePoly p;
    p.add_term(0, 0, c);
    return p;
}

DegreePoly DegreePoly::d()
{
    DegreePoly p;
    p.add_term(1, 0, 1);
    return p;
}

DegreePoly DegreePoly::delta()
{
    DegreePoly p;
    p.add_term(0, 1, 1);
    return p;
}

Scalar DegreePoly::coeff(int dpow, int deltapow) const
{
    auto it = coef_.find({dpow, deltapow});
    return it == coef_.end() ? Scalar(0) : it->second;
}

void DegreePoly::add_term(int dpow, int deltapow, const Scalar& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = coef_.try_emplace({dpow, deltapow}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            coef_.erase(it);
    }
}

int DegreePoly::degree_d() const
{
    int d = -1;
    for (auto& [k, c] : coef_)
        d = std::max(d, k.first);
    return d;
}

bool DegreePoly::linear_in_delta() const
{
    for (auto& [k, c] : coef_)
        if (k.second > 1)
            return false;
    return true;
}

DegreePoly DegreePoly::delta_part(int deltapow) const
{
    DegreePoly p;
    for (auto& [k, c] : coef_)
        if (k.second == deltapow)
            p.add_term(k.first, 0, c);
    return p;
}

Scalar DegreePoly::eval(const Scalar& dv, const Scalar& deltav) const
{
    Scalar s = 0;
    for (auto& [k, c] : coef_) {
        Scalar t = c;
        for (int i = 0; i < k.first; ++i)
            t *= dv;
        for (int i = 0; i < k.second; ++i)
            t *= deltav;
        s += t;
    }
    return s;
}

std::string DegreePoly::str() const
{
    if (coef_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) {
        auto [dp, ep] = it->first;
        const Scalar& c = it->second;
        Scalar a = abs(c);
        std::string mono;
        if (dp == 1)
            mono = "d";
        else if (dp > 1)
            mono = "d^" + std::to_string(dp);
        if (ep) {
            if (!mono.empty())
                mono += '*';
            mono += "delta";
            if (ep > 1)
                mono += '^' + std::to_string(ep);
        }
        os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
        if (mono.empty())
            os << a.get_str();
        else if (a == 1)
            os << mono;
        else
            os << a.get_str() << '*' << mono;
        first = false;
    }
    return os.str();
}

DegreePoly operator+(const DegreePoly& a, const DegreePoly& b)
{
    DegreePoly r = a;
    for (auto& [k, c] : b.coefficients())
        r.add_term(k.first, k.second, c);
    return r;
}

DegreePoly operator-(const DegreePoly& a, const DegreePoly& b)
{
    DegreePoly r = a;
    for (auto& [k, c] : b.coefficients())
        r.add_term(k.first, k.second, -c);
    return r;
}

DegreePoly operator*(const DegreePoly& a, const DegreePoly& b)
{
    DegreePoly r;
    for (auto& [k1, c1] : a.coefficients())
        for (auto& [k2, c2] : b.coefficients())
            r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
    return r;
}

DegreePoly operator*(const Scalar& c, const DegreePoly& a)
{
    DegreePoly r;
    for (auto& [k, v] : a.coefficients())
        r.add_term(k.first, k.second, c * v);
    return r;
}

DegreePoly interpolate(const std::vector<std::pair<Scalar, Scalar>>& points, int degree_bound)
{
    if (degree_bound < 0)
        throw usage_error("interpolate: negative degree bound");
    std::size_t n = static_cast<std::size_t>(degree_bound) + 1;
    if (points.size() < n)
        throw usage_error("interpolate: need at least degree_bound+1 points");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (points[i].first == points[j].first)
                throw usage_error("interpolate: repeated abscissa");

    // Newton divided differences on the first n points
    std::vector<Scalar> dd(n);
    for (std::size_t i = 0; i < n; ++i)
        dd[i] = points[i].second;
    for (std::size_t k = 1; k < n; ++k)
        for (std::size_t i = n - 1; i >= k; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - k].first);
            if (i == k)
                break;
        }
    DegreePoly p = DegreePoly::constant(dd[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        DegreePoly lin = DegreePoly::d() - DegreePoly::constant(points[k].first);
        p = p * lin + DegreePoly::constant(dd[k]);
    }
    for (std::size_t i = n; i < points.size(); ++i)
        if (p.eval(points[i].first) != points[i].second)
            throw std::runtime_error("interpolate: surplus point " + points[i].first.get_str() +
                                     " off the interpolant; degree bound too small");
    return p;
}

}  // namespace jetcalc
